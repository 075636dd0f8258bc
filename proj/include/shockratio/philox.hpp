#pragma once

#include <cstdint>

namespace shockratio {

/// Philox4x32-10 counter-based generator.
///
/// Streams are addressed, not stated: block (path, ctr) -> 4 x u32. Draw i of
/// path p is the same no matter which thread asks for it, which is what makes
/// the Monte Carlo results independent of the execution order.
class philox4x32 {
public:
  struct block {
    uint32_t v[4];
  };

  explicit philox4x32(uint64_t seed) : k0_(static_cast<uint32_t>(seed)), k1_(static_cast<uint32_t>(seed >> 32)) {}

  block operator()(uint64_t path, uint64_t ctr) const {
    uint32_t c0 = static_cast<uint32_t>(ctr);
    uint32_t c1 = static_cast<uint32_t>(ctr >> 32);
    uint32_t c2 = static_cast<uint32_t>(path);
    uint32_t c3 = static_cast<uint32_t>(path >> 32);
    uint32_t k0 = k0_, k1 = k1_;
    for (int r = 0; r < 10; ++r) {
      uint64_t p0 = static_cast<uint64_t>(0xD2511F53u) * c0;
      uint64_t p1 = static_cast<uint64_t>(0xCD9E8D57u) * c2;
      uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
      uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
      uint32_t n0 = hi1 ^ c1 ^ k0;
      uint32_t n1 = lo1;
      uint32_t n2 = hi0 ^ c3 ^ k1;
      uint32_t n3 = lo0;
      c0 = n0; c1 = n1; c2 = n2; c3 = n3;
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return block{{c0, c1, c2, c3}};
  }

private:
  uint32_t k0_, k1_;
};

/// One independent substream per Monte Carlo path; hands out U(0,1) doubles
/// with full 53-bit mantissas.
class path_stream {
public:
  path_stream(const philox4x32& gen, uint64_t path) : gen_(&gen), path_(path) {}

  double u01() {
    uint32_t a = next_u32();
    uint32_t b = next_u32();
    uint64_t bits = ((static_cast<uint64_t>(a) << 32) | b) >> 11; // 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  uint32_t next_u32() {
    if (have_ == 0) {
      blk_ = (*gen_)(path_, ctr_++);
      have_ = 4;
    }
    uint32_t v = blk_.v[4 - have_];
    --have_;
    return v;
  }

private:
  const philox4x32* gen_;
  uint64_t path_;
  uint64_t ctr_ = 0;
  philox4x32::block blk_{};
  int have_ = 0;
};

} // namespace shockratio
