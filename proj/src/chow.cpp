#include "jinv/chow.hpp"

#include <bit>
#include <stdexcept>

namespace jinv {

std::string to_string(GroupLabel label) {
  switch (label) {
    case GroupLabel::SO: return "SO";
    case GroupLabel::Spin: return "Spin";
    case GroupLabel::SpinHalf: return "SpinHalf";
    case GroupLabel::PGO: return "PGO";
  }
  throw std::invalid_argument("unknown group label");
}

namespace {

/// Largest t >= 0 with d * 2^t <= numerator (requires d <= numerator).
int floor_log2_quotient(int numerator, int d) {
  int t = 0;
  Int v = d;
  while (2 * v <= numerator) {
    v *= 2;
    ++t;
  }
  return t;
}

int two_adic_valuation(int n) {
  return static_cast<int>(std::countr_zero(static_cast<unsigned>(n)));
}

} // namespace

KacSignature kac_signature(GroupLabel label, int n, Int p) {
  if (p != 2) {
    throw std::domain_error("the Chow ring table is specific to p = 2");
  }

  KacSignature sig;
  sig.p = 2;
  sig.label = label;
  sig.n_param = n;

  switch (label) {
    case GroupLabel::SO: {
      if (n < 2) throw std::invalid_argument("SO_n requires n >= 2");
      sig.r = (n + 1) / 4;
      for (int i = 1; i <= sig.r; ++i) {
        const int d = 2 * i - 1;
        sig.d.push_back(d);
        sig.k.push_back(floor_log2_quotient(n - 1, d));
      }
      break;
    }
    case GroupLabel::Spin: {
      if (n < 5) throw std::invalid_argument("Spin_n requires n >= 5");
      sig.r = (n - 3) / 4;
      for (int i = 1; i <= sig.r; ++i) {
        const int d = 2 * i + 1;
        sig.d.push_back(d);
        sig.k.push_back(floor_log2_quotient(n - 1, d));
      }
      break;
    }
    case GroupLabel::SpinHalf: {
      if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("SpinHalf_2n requires even n >= 4");
      }
      sig.r = n / 2;
      for (int i = 1; i <= sig.r; ++i) {
        if (i == 1) {
          sig.d.push_back(1);
          sig.k.push_back(two_adic_valuation(n));
        } else {
          const int d = 2 * i - 1;
          sig.d.push_back(d);
          sig.k.push_back(floor_log2_quotient(2 * n - 1, d));
        }
      }
      break;
    }
    case GroupLabel::PGO: {
      if (n < 1) throw std::invalid_argument("PGO_2n requires n >= 1");
      sig.r = (n + 2) / 2;
      for (int i = 1; i <= sig.r; ++i) {
        if (i == 1) {
          sig.d.push_back(1);
          sig.k.push_back(two_adic_valuation(n));
        } else {
          const int d = 2 * i - 3;
          sig.d.push_back(d);
          sig.k.push_back(floor_log2_quotient(2 * n - 1, d));
        }
      }
      break;
    }
  }
  return sig;
}

bool binom_odd(std::uint64_t a, std::uint64_t b) {
  if (b > a) return false;
  return (b & (a - b)) == 0;
}

bool binom_nonzero_mod_p(std::uint64_t a, std::uint64_t b, Int p) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (b > a) return false;
  const auto q = static_cast<std::uint64_t>(p);
  // Lucas: C(a, b) is nonzero mod p iff every base-p digit of b is <= the
  // corresponding digit of a.
  while (a != 0 || b != 0) {
    if (b % q > a % q) return false;
    a /= q;
    b /= q;
  }
  return true;
}

namespace {

bool is_power_of(Int value, Int p, int& exponent_out) {
  int s = 0;
  while (value % p == 0) {
    value /= p;
    ++s;
  }
  if (value != 1) return false;
  exponent_out = s;
  return true;
}

} // namespace

bool is_admissible(const KacSignature& sig, const JTuple& J) {
  if (static_cast<int>(J.size()) != sig.r) {
    throw std::invalid_argument("tuple length does not match the signature");
  }
  for (int i = 0; i < sig.r; ++i) {
    if (J[static_cast<std::size_t>(i)] < 0 ||
        J[static_cast<std::size_t>(i)] > sig.k[static_cast<std::size_t>(i)]) {
      return false;
    }
  }

  const bool pgo_rule = sig.label == GroupLabel::PGO;
  for (int i = 1; i <= sig.r; ++i) {
    const int di = sig.d[static_cast<std::size_t>(i - 1)];
    for (int l = 0; l <= di; ++l) {
      if (!binom_nonzero_mod_p(static_cast<std::uint64_t>(di),
                               static_cast<std::uint64_t>(l), sig.p)) {
        continue;
      }
      const Int target = di + l;
      for (int m = 1; m <= sig.r; ++m) {
        if (pgo_rule && (i < 2 || m < 2)) continue;
        const int dm = sig.d[static_cast<std::size_t>(m - 1)];
        if (target % dm != 0) continue;
        int s = 0;
        if (!is_power_of(target / dm, sig.p, s)) continue;
        if (J[static_cast<std::size_t>(m - 1)] >
            J[static_cast<std::size_t>(i - 1)] + s) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<JTuple> admissible_tuples(const KacSignature& sig) {
  if (sig.r > 8) {
    throw std::domain_error("tuple enumeration is guarded to r <= 8, got r = " +
                            std::to_string(sig.r));
  }
  std::vector<JTuple> out;
  JTuple cur(static_cast<std::size_t>(sig.r), 0);
  while (true) {
    if (is_admissible(sig, cur)) out.push_back(cur);
    // Odometer with j_1 varying fastest.
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (++cur[i] <= sig.k[i]) break;
      cur[i] = 0;
    }
    if (i == cur.size()) break;
  }
  return out;
}

std::vector<Int> poincare_polynomial(const KacSignature& sig, const JTuple& J) {
  if (static_cast<int>(J.size()) != sig.r) {
    throw std::invalid_argument("tuple length does not match the signature");
  }
  for (int i = 0; i < sig.r; ++i) {
    if (J[static_cast<std::size_t>(i)] < 0 ||
        J[static_cast<std::size_t>(i)] > sig.k[static_cast<std::size_t>(i)]) {
      throw std::domain_error("tuple entry j_" + std::to_string(i + 1) +
                              " is outside [0, k_" + std::to_string(i + 1) + "]");
    }
  }

  std::vector<Int> poly{1};
  for (int i = 0; i < sig.r; ++i) {
    const int d = sig.d[static_cast<std::size_t>(i)];
    Int terms = 1;
    for (int e = 0; e < J[static_cast<std::size_t>(i)]; ++e) terms *= sig.p;
    // Factor 1 + t^d + ... + t^(d (terms - 1)).
    std::vector<Int> next(poly.size() + static_cast<std::size_t>(d * (terms - 1)), 0);
    for (std::size_t c = 0; c < poly.size(); ++c) {
      for (Int t = 0; t < terms; ++t) {
        next[c + static_cast<std::size_t>(d) * static_cast<std::size_t>(t)] += poly[c];
      }
    }
    poly = std::move(next);
  }
  return poly;
}

} // namespace jinv
