#pragma once

#include <cstdint>
#include <vector>

namespace canwb {

// Bus levels. Dominant is the driven level and encodes logical 0;
// recessive encodes logical 1 and is overwritten by dominant.
enum class Bit : std::uint8_t { dominant = 0, recessive = 1 };

using BitStream = std::vector<Bit>;

constexpr Bit flip(Bit b) {
    return b == Bit::dominant ? Bit::recessive : Bit::dominant;
}

constexpr unsigned logic_level(Bit b) { return static_cast<unsigned>(b); }

// CAN 2.0A data frame (11-bit identifier). Extended 29-bit IDs are rejected.
// dlc is derived from the payload so the length invariant cannot be broken.
struct CanFrame {
    std::uint16_t id = 0;               // < 0x800
    std::vector<std::uint8_t> payload;  // size 0..8
    double timestamp = 0.0;             // seconds, >= 0; log metadata

    std::uint8_t dlc() const { return static_cast<std::uint8_t>(payload.size()); }

    // Throws InvalidInput("invalid frame") when any invariant is broken.
    void validate() const;
};

// Wire-content equality. The timestamp travels in the frame log, not in the
// serialized bit stream, so it does not participate.
bool operator==(const CanFrame& a, const CanFrame& b);
inline bool operator!=(const CanFrame& a, const CanFrame& b) { return !(a == b); }

// CAN CRC-15, generator polynomial 0x4599. Computed by polynomial long
// division of the message followed by 15 zero bits.
std::uint16_t crc15(const BitStream& bits);

// Inserts a complement bit after every run of 5 identical bits. The run
// counter restarts at each inserted stuff bit.
BitStream stuff_bits(const BitStream& bits);

// Inverse of stuff_bits. Throws InvalidInput("stuff violation") when the
// input contains 6 identical consecutive bits.
BitStream unstuff_bits(const BitStream& bits);

// Unstuffed layout: SOF, 11-bit ID (MSB first), RTR, IDE, r0, 4-bit DLC,
// payload (MSB first), CRC-15, CRC delimiter, ACK slot (recessive as
// transmitted), ACK delimiter, 7-bit EOF. Stuffing covers SOF..CRC only.
// Unstuffed length is 44 + 8*dlc bits.
BitStream serialize_frame(const CanFrame& frame);

// Inverse of serialize_frame; verifies CRC and fixed-form bits, and requires
// the stream to be consumed exactly. Throws InvalidInput with "crc error",
// "stuff violation", "truncated" or "invalid frame". The returned timestamp
// is 0 (not carried on the wire).
CanFrame deserialize_frame(const BitStream& bits);

// Dominant bits win: returns the contender with the numerically lowest ID.
// Duplicate IDs are a simulated fault -> InvalidInput("arbitration conflict").
const CanFrame& arbitrate(const std::vector<CanFrame>& contenders);

// Number of bits a frame occupies on the bus (stuffed stream length).
std::size_t frame_bit_count(const CanFrame& frame);

} // namespace canwb
