#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace p2p {

using Bytes = std::vector<std::uint8_t>;

/// Thrown on any malformed wire input or unencodable value.
class CodecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ByteWriter {
public:
    void u8(std::uint8_t v) { buf_.push_back(v); }

    void u16le(std::uint16_t v) {
        buf_.push_back(static_cast<std::uint8_t>(v & 0xFF));
        buf_.push_back(static_cast<std::uint8_t>(v >> 8));
    }

    void u32le(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) {
            buf_.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
        }
    }

    void u64le(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            buf_.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xFF));
        }
    }

    void raw(std::span<const std::uint8_t> data) {
        buf_.insert(buf_.end(), data.begin(), data.end());
    }

    void text(std::string_view s) {
        buf_.insert(buf_.end(), s.begin(), s.end());
    }

    // NUL-terminated string; the string itself must not contain the terminator.
    void cstr(std::string_view s) {
        if (s.find('\0') != std::string_view::npos) {
            throw CodecError("string field contains terminator byte");
        }
        text(s);
        buf_.push_back(0x00);
    }

    std::size_t size() const { return buf_.size(); }
    Bytes take() { return std::move(buf_); }

private:
    Bytes buf_;
};

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint16_t u16le() {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] | (data_[pos_ + 1] << 8));
        pos_ += 2;
        return v;
    }

    std::uint32_t u32le() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 3; i >= 0; --i) v = (v << 8) | data_[pos_ + i];
        pos_ += 4;
        return v;
    }

    std::uint64_t u64le() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 7; i >= 0; --i) v = (v << 8) | data_[pos_ + i];
        pos_ += 8;
        return v;
    }

    std::span<const std::uint8_t> raw(std::size_t n) {
        need(n);
        auto out = data_.subspan(pos_, n);
        pos_ += n;
        return out;
    }

    // Reads up to (and consumes) a single NUL terminator.
    std::string cstr() {
        std::size_t end = pos_;
        while (end < data_.size() && data_[end] != 0x00) ++end;
        if (end == data_.size()) throw CodecError("unterminated string");
        std::string out(reinterpret_cast<const char*>(data_.data() + pos_), end - pos_);
        pos_ = end + 1;
        return out;
    }

    std::size_t remaining() const { return data_.size() - pos_; }
    std::size_t consumed() const { return pos_; }

private:
    void need(std::size_t n) const {
        if (data_.size() - pos_ < n) throw CodecError("truncated input");
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(std::string_view hex);  // throws CodecError on odd length / non-hex

}  // namespace p2p
