#include "jinv/rootsystem.hpp"

#include <stdexcept>
#include <utility>

namespace jinv {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
  }
  throw std::invalid_argument("unknown family");
}

RootSystem::RootSystem(Family f, int n) : family(f), rank(n) {
  const int min_rank = (f == Family::A) ? 1 : (f == Family::B) ? 2 : 3;
  if (n < min_rank) {
    throw std::invalid_argument("unsupported rank for family " + to_string(f) +
                                ": rank " + std::to_string(n) + " < " +
                                std::to_string(min_rank));
  }
}

bool operator==(const RootSystem& a, const RootSystem& b) {
  return a.family == b.family && a.rank == b.rank;
}

bool operator!=(const RootSystem& a, const RootSystem& b) { return !(a == b); }

WeightVec operator+(const WeightVec& a, const WeightVec& b) {
  return WeightVec(a.coords + b.coords);
}
WeightVec operator-(const WeightVec& a, const WeightVec& b) {
  return WeightVec(a.coords - b.coords);
}
WeightVec operator-(const WeightVec& a) { return WeightVec(-a.coords); }
WeightVec operator*(Int k, const WeightVec& a) { return WeightVec(k * a.coords); }
bool operator==(const WeightVec& a, const WeightVec& b) {
  return a.coords.size() == b.coords.size() && a.coords == b.coords;
}
bool operator!=(const WeightVec& a, const WeightVec& b) { return !(a == b); }

RootVec operator+(const RootVec& a, const RootVec& b) {
  return RootVec(a.coords + b.coords);
}
RootVec operator-(const RootVec& a, const RootVec& b) {
  return RootVec(a.coords - b.coords);
}
RootVec operator-(const RootVec& a) { return RootVec(-a.coords); }
RootVec operator*(Int k, const RootVec& a) { return RootVec(k * a.coords); }
bool operator==(const RootVec& a, const RootVec& b) {
  return a.coords.size() == b.coords.size() && a.coords == b.coords;
}
bool operator!=(const RootVec& a, const RootVec& b) { return !(a == b); }

namespace {

void check_index(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) {
    throw std::invalid_argument("node index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(rs.rank));
  }
}

} // namespace

IMat cartan_matrix(const RootSystem& rs) {
  const int n = rs.rank;
  IMat c = 2 * IMat::Identity(n, n);
  switch (rs.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) {
        c(i, i + 1) = -1;
        c(i + 1, i) = -1;
      }
      break;
    case Family::B:
      // alpha_n is the short root: <alpha_n^vee, alpha_{n-1}> = -2.
      for (int i = 0; i + 1 < n; ++i) {
        c(i, i + 1) = -1;
        c(i + 1, i) = -1;
      }
      c(n - 1, n - 2) = -2;
      break;
    case Family::D:
      // Chain 1..n-1, with node n attached to node n-2.
      for (int i = 0; i + 2 < n; ++i) {
        c(i, i + 1) = -1;
        c(i + 1, i) = -1;
      }
      c(n - 3, n - 1) = -1;
      c(n - 1, n - 3) = -1;
      break;
  }
  return c;
}

WeightVec zero_weight(const RootSystem& rs) {
  return WeightVec(IVec::Zero(rs.rank));
}

WeightVec fundamental_weight(const RootSystem& rs, int i) {
  check_index(rs, i);
  IVec v = IVec::Zero(rs.rank);
  v(i - 1) = 1;
  return WeightVec(std::move(v));
}

WeightVec simple_root_as_weight(const RootSystem& rs, int i) {
  check_index(rs, i);
  return WeightVec(cartan_matrix(rs).col(i - 1));
}

RootVec simple_root(const RootSystem& rs, int i) {
  check_index(rs, i);
  IVec v = IVec::Zero(rs.rank);
  v(i - 1) = 1;
  return RootVec(std::move(v));
}

WeightVec reflect(const RootSystem& rs, int i, const WeightVec& v) {
  check_index(rs, i);
  if (v.coords.size() != rs.rank) {
    throw std::invalid_argument("weight dimension mismatch");
  }
  return WeightVec(v.coords - v.coords(i - 1) * cartan_matrix(rs).col(i - 1));
}

bool is_negative_root(const RootSystem& rs, const RootVec& v) {
  if (v.coords.size() != rs.rank) {
    throw std::invalid_argument("root dimension mismatch");
  }
  return (v.coords.array() <= 0).all();
}

} // namespace jinv
