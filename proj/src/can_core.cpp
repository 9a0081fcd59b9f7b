#include "canwb/can_frame.hpp"

#include "canwb/error.hpp"

#include <algorithm>

namespace canwb {

namespace {

// x^15 + x^14 + x^10 + x^8 + x^7 + x^4 + x^3 + 1, 16 coefficient bits.
constexpr std::uint16_t kCrcGenerator = 0xC599;

constexpr std::size_t kHeaderBits = 19;   // SOF + ID + RTR + IDE + r0 + DLC
constexpr std::size_t kCrcBits = 15;
constexpr std::size_t kTrailerBits = 10;  // CRC del + ACK + ACK del + EOF(7)

void push_uint(BitStream& out, std::uint32_t value, unsigned nbits) {
    for (unsigned i = nbits; i-- > 0;) {
        out.push_back(((value >> i) & 1u) ? Bit::recessive : Bit::dominant);
    }
}

// Incremental unstuffer over a stuffed stream. Runs are tracked in the
// stuffed domain, where an inserted stuff bit starts a new run.
class Unstuffer {
public:
    explicit Unstuffer(const BitStream& in) : in_(in) {}

    Bit next() {
        consume_pending_stuff_bit();
        if (pos_ >= in_.size()) throw InvalidInput("truncated");
        const Bit b = in_[pos_++];
        if (run_ > 0 && b == prev_) {
            ++run_;
        } else {
            prev_ = b;
            run_ = 1;
        }
        return b;
    }

    // The stuffable region may end on a completed run of 5, in which case
    // one trailing stuff bit still sits in the stream.
    void finish_stuffed_region() { consume_pending_stuff_bit(); }

    Bit next_raw() {
        if (pos_ >= in_.size()) throw InvalidInput("truncated");
        return in_[pos_++];
    }

    bool exhausted() const { return pos_ == in_.size(); }

private:
    void consume_pending_stuff_bit() {
        if (run_ != 5) return;
        if (pos_ >= in_.size()) throw InvalidInput("truncated");
        const Bit s = in_[pos_++];
        if (s == prev_) throw InvalidInput("stuff violation");
        prev_ = s;
        run_ = 1;
    }

    const BitStream& in_;
    std::size_t pos_ = 0;
    int run_ = 0;
    Bit prev_ = Bit::recessive;
};

} // namespace

void CanFrame::validate() const {
    if (id >= 0x800 || payload.size() > 8 ||
        !(timestamp >= 0.0)) {
        throw InvalidInput("invalid frame");
    }
}

bool operator==(const CanFrame& a, const CanFrame& b) {
    return a.id == b.id && a.payload == b.payload;
}

std::uint16_t crc15(const BitStream& bits) {
    if (bits.empty()) throw InvalidInput("empty bitstream");
    std::vector<std::uint8_t> buf(bits.size() + kCrcBits, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) buf[i] = logic_level(bits[i]);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (!buf[i]) continue;
        for (unsigned j = 0; j < 16; ++j) {
            buf[i + j] ^= (kCrcGenerator >> (15 - j)) & 1u;
        }
    }
    std::uint16_t rem = 0;
    for (std::size_t i = bits.size(); i < buf.size(); ++i) {
        rem = static_cast<std::uint16_t>((rem << 1) | buf[i]);
    }
    return rem;
}

BitStream stuff_bits(const BitStream& bits) {
    BitStream out;
    out.reserve(bits.size() + bits.size() / 5 + 1);
    int run = 0;
    Bit prev = Bit::recessive;
    for (const Bit b : bits) {
        if (run > 0 && b == prev) {
            ++run;
        } else {
            prev = b;
            run = 1;
        }
        out.push_back(b);
        if (run == 5) {
            const Bit s = flip(prev);
            out.push_back(s);
            prev = s;
            run = 1;
        }
    }
    return out;
}

BitStream unstuff_bits(const BitStream& bits) {
    BitStream out;
    out.reserve(bits.size());
    int run = 0;
    Bit prev = Bit::recessive;
    bool drop_next = false;
    for (const Bit b : bits) {
        if (drop_next) {
            if (b == prev) throw InvalidInput("stuff violation");
            prev = b;
            run = 1;
            drop_next = false;
            continue;
        }
        if (run > 0 && b == prev) {
            ++run;
        } else {
            prev = b;
            run = 1;
        }
        out.push_back(b);
        if (run == 5) drop_next = true;
    }
    return out;
}

BitStream serialize_frame(const CanFrame& frame) {
    frame.validate();
    BitStream u;
    u.reserve(kHeaderBits + 8 * frame.payload.size() + kCrcBits);
    u.push_back(Bit::dominant);             // SOF
    push_uint(u, frame.id, 11);
    u.push_back(Bit::dominant);             // RTR: data frame
    u.push_back(Bit::dominant);             // IDE: standard format
    u.push_back(Bit::dominant);             // r0
    push_uint(u, frame.dlc(), 4);
    for (const std::uint8_t byte : frame.payload) push_uint(u, byte, 8);
    push_uint(u, crc15(u), kCrcBits);

    BitStream out = stuff_bits(u);
    out.push_back(Bit::recessive);          // CRC delimiter
    out.push_back(Bit::recessive);          // ACK slot, as transmitted
    out.push_back(Bit::recessive);          // ACK delimiter
    for (int i = 0; i < 7; ++i) out.push_back(Bit::recessive);
    return out;
}

CanFrame deserialize_frame(const BitStream& bits) {
    if (bits.empty()) throw InvalidInput("truncated");
    Unstuffer un(bits);
    BitStream covered;  // unstuffed bits the CRC covers

    const auto take = [&] {
        const Bit b = un.next();
        covered.push_back(b);
        return b;
    };
    const auto take_uint = [&](unsigned nbits) {
        std::uint32_t v = 0;
        for (unsigned i = 0; i < nbits; ++i) v = (v << 1) | logic_level(take());
        return v;
    };

    if (take() != Bit::dominant) throw InvalidInput("invalid frame");  // SOF
    CanFrame frame;
    frame.id = static_cast<std::uint16_t>(take_uint(11));
    if (take() != Bit::dominant) throw InvalidInput("invalid frame");  // RTR
    if (take() != Bit::dominant) throw InvalidInput("invalid frame");  // IDE
    if (take() != Bit::dominant) throw InvalidInput("invalid frame");  // r0
    const std::uint32_t dlc = take_uint(4);
    if (dlc > 8) throw InvalidInput("invalid frame");
    frame.payload.resize(dlc);
    for (std::uint32_t i = 0; i < dlc; ++i) {
        frame.payload[i] = static_cast<std::uint8_t>(take_uint(8));
    }

    const std::uint16_t expected = crc15(covered);
    std::uint16_t received = 0;
    for (unsigned i = 0; i < kCrcBits; ++i) {
        received = static_cast<std::uint16_t>((received << 1) | logic_level(un.next()));
    }
    un.finish_stuffed_region();
    if (received != expected) throw InvalidInput("crc error");

    for (unsigned i = 0; i < kTrailerBits; ++i) {
        if (un.next_raw() != Bit::recessive) throw InvalidInput("invalid frame");
    }
    if (!un.exhausted()) throw InvalidInput("invalid frame");
    return frame;
}

const CanFrame& arbitrate(const std::vector<CanFrame>& contenders) {
    if (contenders.empty()) throw InvalidInput("empty contender set");
    for (std::size_t i = 0; i < contenders.size(); ++i) {
        for (std::size_t j = i + 1; j < contenders.size(); ++j) {
            if (contenders[i].id == contenders[j].id) {
                throw InvalidInput("arbitration conflict");
            }
        }
    }
    const CanFrame* winner = &contenders.front();
    for (std::size_t i = 1; i < contenders.size(); ++i) {
        if (contenders[i].id < winner->id) winner = &contenders[i];
    }
    return *winner;
}

std::size_t frame_bit_count(const CanFrame& frame) {
    return serialize_frame(frame).size();
}

} // namespace canwb
