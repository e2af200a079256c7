#ifndef AEROLINK_RNG_HPP
#define AEROLINK_RNG_HPP

#include <array>
#include <cstdint>

namespace aerolink {

/// Philox4x32-10 counter-based generator. A stream is identified by a 64-bit key
/// and a 96-bit stream id (sample index, sub-stream); the low counter word walks
/// through blocks. Output depends only on (key, stream id, position), so the same
/// stream replays identically on every platform and any set of streams can be
/// consumed from any thread in any order.
class RngStream {
public:
    using Block = std::array<std::uint32_t, 4>;

    RngStream(std::uint64_t key, std::uint64_t stream, std::uint32_t substream = 0) noexcept;

    std::uint32_t next_u32() noexcept;
    std::uint64_t next_u64() noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Raw Philox4x32-10 bijection, exposed for known-answer tests.
    static Block philox(Block counter, std::array<std::uint32_t, 2> key) noexcept;

private:
    void refill() noexcept;

    std::array<std::uint32_t, 2> key_;
    Block counter_;
    Block buffer_{};
    unsigned used_ = 4;
};

/// SplitMix64 finalizer; used to derive per-point keys from a master seed.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Key for sweep point `point` under `master_seed`.
std::uint64_t derive_key(std::uint64_t master_seed, std::uint64_t point) noexcept;

}  // namespace aerolink

#endif  // AEROLINK_RNG_HPP
