#include "mzt/direct.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace mzt {

Index::Index(std::vector<int> entries, IndexKind kind)
    : entries_(std::move(entries)), kind_(kind) {
  if (entries_.empty()) throw std::domain_error("index: must be nonempty");
  for (int e : entries_)
    if (e < 2) throw std::domain_error("index: entries must be at least 2");
}

long Index::weight() const {
  long w = 0;
  for (int e : entries_) w += e;
  return w;
}

std::string Index::to_string() const {
  std::string s = kind_ == IndexKind::zeta ? "zeta(" : "t(";
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

Index hoffman_index(int r, int s, IndexKind kind) {
  if (r < 0 || s < 0) throw std::domain_error("hoffman index: r, s must be nonnegative");
  std::vector<int> e;
  e.reserve(static_cast<size_t>(r) + static_cast<size_t>(s) + 1);
  for (int i = 0; i < r; ++i) e.push_back(2);
  e.push_back(3);
  for (int i = 0; i < s; ++i) e.push_back(2);
  return Index(std::move(e), kind);
}

namespace {

// RAII block of mpfr values at one precision.
class MpfrArray {
 public:
  MpfrArray(size_t n, mpfr_prec_t prec) : v_(n) {
    for (auto& x : v_) {
      mpfr_init2(x, prec);
      mpfr_set_zero(x, 1);
    }
  }
  ~MpfrArray() {
    for (auto& x : v_) mpfr_clear(x);
  }
  mpfr_ptr operator[](size_t i) { return v_[i]; }

 private:
  std::vector<mpfr_t> v_;
};

// Numerator 16449341/1e7 rounds zeta(2) = 1.6449340668... up in the last
// digit, so the bound stays valid without consulting any computed constant.
void set_zeta2_upper(mpfr_ptr out) {
  mpfr_set_ui(out, 16449341, MPFR_RNDU);
  mpfr_div_ui(out, out, 10000000, MPFR_RNDU);
}

EvalResult nested_sum(const Index& index, long terms, const PrecisionContext& ctx, bool odd_only) {
  if (terms < index.depth()) throw std::domain_error("direct sum: need terms >= depth");
  const auto& s = index.entries();
  const size_t depth = s.size();
  const mpfr_prec_t prec = ctx.working_bits + 32;

  MpfrArray acc(depth, prec);
  mpfr_t inv, pw, tmp;
  mpfr_init2(inv, prec);
  mpfr_init2(pw, prec);
  mpfr_init2(tmp, prec);

  // Ascending pass; acc[i] is updated before acc[i-1] so it sees the prefix
  // value for indices strictly below the current one.
  for (long k = 1; k <= terms; ++k) {
    unsigned long den = odd_only ? 2 * static_cast<unsigned long>(k) - 1
                                 : static_cast<unsigned long>(k);
    mpfr_set_ui(inv, den, MPFR_RNDN);
    mpfr_ui_div(inv, 1, inv, MPFR_RNDN);
    for (size_t i = depth; i-- > 0;) {
      const int e = s[i];
      if (e == 2) {
        mpfr_sqr(pw, inv, MPFR_RNDN);
      } else if (e == 3) {
        mpfr_sqr(pw, inv, MPFR_RNDN);
        mpfr_mul(pw, pw, inv, MPFR_RNDN);
      } else {
        mpfr_pow_ui(pw, inv, static_cast<unsigned long>(e), MPFR_RNDN);
      }
      if (i == 0) {
        mpfr_add(acc[0], acc[0], pw, MPFR_RNDN);
      } else {
        mpfr_mul(tmp, acc[i - 1], pw, MPFR_RNDN);
        mpfr_add(acc[i], acc[i], tmp, MPFR_RNDN);
      }
    }
  }

  Real value(ctx);
  mpfr_set(value.raw(), acc[depth - 1], MPFR_RNDN);

  // Tail bound, rounded upward throughout.
  const int sl = s.back();
  Real tail(ctx);
  mpfr_t bound, u;
  mpfr_init2(bound, prec);
  mpfr_init2(u, prec);
  set_zeta2_upper(u);
  mpfr_pow_ui(bound, u, static_cast<unsigned long>(depth - 1), MPFR_RNDU);
  unsigned long edge = odd_only ? 2 * static_cast<unsigned long>(terms) - 1
                                : static_cast<unsigned long>(terms);
  mpfr_ui_pow_ui(tmp, edge, static_cast<unsigned long>(sl - 1), MPFR_RNDD);
  mpfr_div(bound, bound, tmp, MPFR_RNDU);
  mpfr_div_ui(bound, bound, static_cast<unsigned long>(sl - 1), MPFR_RNDU);
  if (odd_only) mpfr_div_ui(bound, bound, 2, MPFR_RNDU);
  mpfr_set(tail.raw(), bound, MPFR_RNDU);

  mpfr_clears(inv, pw, tmp, bound, u, static_cast<mpfr_ptr>(nullptr));
  return make_eval(std::move(value), std::move(tail), Route::direct,
                   static_cast<std::uint64_t>(terms));
}

}  // namespace

EvalResult mzv_direct(const Index& index, long terms, const PrecisionContext& ctx) {
  if (index.kind() != IndexKind::zeta)
    throw std::domain_error("mzv_direct: index kind must be zeta");
  return nested_sum(index, terms, ctx, false);
}

EvalResult tvalue_direct(const Index& index, long terms, const PrecisionContext& ctx) {
  if (index.kind() != IndexKind::t) throw std::domain_error("tvalue_direct: index kind must be t");
  return nested_sum(index, terms, ctx, true);
}

}  // namespace mzt
