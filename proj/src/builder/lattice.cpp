#include "liekit/builder/lattice.hpp"

#include <stdexcept>

namespace liekit::builder {

namespace {
// Keeps every product of two scaled constants, summed over a few thousand
// terms, inside int64.
constexpr long kMaxScaledCoefficient = 1L << 28;
}  // namespace

IntegerTable::IntegerTable(const StructureTable& t) : dim_(t.dim()), scale_(1), br_(t.dim() * t.dim()) {
  for (const auto& [key, terms] : t.brackets())
    for (const auto& term : terms) scale_ = lcm(scale_, term.coeff.den());
  for (const auto& [key, terms] : t.brackets()) {
    const auto [i, j] = key;
    auto& fwd = br_[i * dim_ + j];
    auto& rev = br_[j * dim_ + i];
    for (const auto& term : terms) {
      BigInt v = term.coeff.num() * (scale_ / term.coeff.den());
      if (!v.fits_slong_p() || abs(v) > kMaxScaledCoefficient)
        throw std::overflow_error("IntegerTable: scaled structure constant too large for the integer sweep");
      const long c = v.get_si();
      fwd.push_back({static_cast<std::uint32_t>(term.index), c});
      rev.push_back({static_cast<std::uint32_t>(term.index), -c});
    }
  }
}

}  // namespace liekit::builder
