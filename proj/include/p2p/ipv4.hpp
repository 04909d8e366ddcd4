#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace p2p {

// IPv4 address held in host order: "a.b.c.d" <-> (a<<24)|(b<<16)|(c<<8)|d.
struct IPv4 {
    std::uint32_t value = 0;

    static IPv4 parse(std::string_view dotted);  // throws CodecError on bad input
    static IPv4 from_u32(std::uint32_t v) { return IPv4{v}; }

    std::uint8_t octet(int i) const { return static_cast<std::uint8_t>(value >> (8 * (3 - i))); }
    std::string str() const;

    auto operator<=>(const IPv4&) const = default;
};

}  // namespace p2p
