// Copyright 2026 The maxpareto Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maxpareto/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "maxpareto/errors.hpp"

namespace maxpareto {

void LpProblem::add_row(const std::vector<Rational>& coeffs, RowSense s,
                        const Rational& b) {
  if (static_cast<int>(coeffs.size()) != a.cols())
    throw DimensionError("add_row: coefficient count mismatch");
  if (sense.empty()) sense.assign(a.rows(), RowSense::LE);
  Mat<Rational> next(a.rows() + 1, a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) next(i, j) = a(i, j);
  for (int j = 0; j < a.cols(); ++j) next(a.rows(), j) = coeffs[j];
  a = std::move(next);
  rhs.push_back(b);
  sense.push_back(s);
}

namespace {

// ---------------------------------------------------------------------------
// Standard-form construction
//
// The public problem (free variables, LE/EQ rows, optional bounds) is turned
// into  max c'y  s.t.  H y = h, y >= 0  with slack and artificial columns.
// Singleton LE rows are folded into variable bounds first; lower bounds
// become shifts, upper bounds become one internal row each. Duals for folded
// rows are reconstructed from reduced costs afterwards.
// ---------------------------------------------------------------------------

struct BoundInfo {
  bool present = false;
  Rational value;
  int provider_row = -1;  // original row index, or -1 for an explicit bound
  Rational provider_coeff = Rational(0);
};

struct VarRecipe {
  enum class Kind { ShiftLower, NegShiftUpper, Split };
  Kind kind = Kind::Split;
  int col0 = -1;
  int col1 = -1;
  Rational offset = Rational(0);
  // Provider of the bound realized as a shift (for dual recovery).
  int shift_provider_row = -1;
  Rational shift_provider_coeff = Rational(0);
};

struct InternalRow {
  std::vector<Rational> coeffs;  // over internal structural columns
  Rational rhs;
  RowSense sense = RowSense::LE;
  int orig_row = -1;  // direct mapping, or -1 for a bound row
  // Bound rows: original singleton row alpha * x_j <= beta realizing the
  // upper bound of the recipe's variable; -1 when the bound was explicit.
  int provider_row = -1;
  Rational provider_coeff = Rational(0);
};

struct StandardForm {
  int num_structural = 0;
  std::vector<VarRecipe> recipes;              // per original variable
  std::vector<InternalRow> rows;
  std::vector<Rational> objective;             // over structural columns (max form)
  bool maximize_negated = false;               // true when original was Min
  bool trivially_infeasible = false;
  std::vector<Rational> presolve_farkas;       // set when trivially infeasible
};

StandardForm build_standard_form(const LpProblem& p) {
  const int m = p.num_rows();
  const int k = p.num_vars();
  if (static_cast<int>(p.rhs.size()) != m)
    throw DimensionError("rhs length does not match row count");
  if (static_cast<int>(p.objective.size()) != k)
    throw DimensionError("objective length does not match variable count");
  if (!p.sense.empty() && static_cast<int>(p.sense.size()) != m)
    throw DimensionError("sense length does not match row count");
  if (!p.lower.empty() && static_cast<int>(p.lower.size()) != k)
    throw DimensionError("lower bound length mismatch");
  if (!p.upper.empty() && static_cast<int>(p.upper.size()) != k)
    throw DimensionError("upper bound length mismatch");

  StandardForm sf;
  sf.maximize_negated = p.direction == OptDir::Min;

  std::vector<BoundInfo> lower(k), upper(k);
  for (int j = 0; j < k; ++j) {
    if (!p.lower.empty() && p.lower[j]) {
      lower[j].present = true;
      lower[j].value = *p.lower[j];
    }
    if (!p.upper.empty() && p.upper[j]) {
      upper[j].present = true;
      upper[j].value = *p.upper[j];
    }
    if (lower[j].present && upper[j].present && lower[j].value > upper[j].value)
      throw DimensionError("variable bounds cross");
  }

  // Fold singleton LE rows into bounds; spot trivial infeasibility.
  std::vector<char> folded(m, 0);
  for (int i = 0; i < m; ++i) {
    if (p.row_sense(i) != RowSense::LE) continue;
    int nz = -1;
    int count = 0;
    for (int j = 0; j < k && count < 2; ++j) {
      if (p.a(i, j) != 0) {
        nz = j;
        ++count;
      }
    }
    if (count == 0) {
      folded[i] = 1;
      if (p.rhs[i] < 0) {
        sf.trivially_infeasible = true;
        sf.presolve_farkas.assign(m, Rational(0));
        sf.presolve_farkas[i] = 1;
        return sf;
      }
      continue;
    }
    if (count != 1) continue;
    const Rational& alpha = p.a(i, nz);
    Rational bound = p.rhs[i] / alpha;
    if (alpha > 0) {
      if (!upper[nz].present || bound < upper[nz].value)
        upper[nz] = BoundInfo{true, bound, i, alpha};
    } else {
      if (!lower[nz].present || bound > lower[nz].value)
        lower[nz] = BoundInfo{true, bound, i, alpha};
    }
    folded[i] = 1;
  }
  // Empty EQ rows.
  for (int i = 0; i < m; ++i) {
    if (p.row_sense(i) != RowSense::EQ) continue;
    bool all_zero = true;
    for (int j = 0; j < k && all_zero; ++j)
      if (p.a(i, j) != 0) all_zero = false;
    if (all_zero) {
      if (p.rhs[i] != 0) {
        sf.trivially_infeasible = true;
        sf.presolve_farkas.assign(m, Rational(0));
        sf.presolve_farkas[i] = p.rhs[i] > 0 ? -1 : 1;
        return sf;
      }
      folded[i] = 1;
    }
  }
  for (int j = 0; j < k; ++j) {
    if (lower[j].present && upper[j].present && lower[j].value > upper[j].value) {
      sf.trivially_infeasible = true;
      sf.presolve_farkas.assign(m, Rational(0));
      if (upper[j].provider_row >= 0)
        sf.presolve_farkas[upper[j].provider_row] = 1 / upper[j].provider_coeff;
      if (lower[j].provider_row >= 0)
        sf.presolve_farkas[lower[j].provider_row] = -1 / lower[j].provider_coeff;
      return sf;
    }
  }

  // Variable recipes.
  sf.recipes.resize(k);
  int ncols = 0;
  for (int j = 0; j < k; ++j) {
    VarRecipe& r = sf.recipes[j];
    if (lower[j].present) {
      r.kind = VarRecipe::Kind::ShiftLower;
      r.col0 = ncols++;
      r.offset = lower[j].value;
      r.shift_provider_row = lower[j].provider_row;
      r.shift_provider_coeff = lower[j].provider_coeff;
    } else if (upper[j].present) {
      r.kind = VarRecipe::Kind::NegShiftUpper;
      r.col0 = ncols++;
      r.offset = upper[j].value;
      r.shift_provider_row = upper[j].provider_row;
      r.shift_provider_coeff = upper[j].provider_coeff;
    } else {
      r.kind = VarRecipe::Kind::Split;
      r.col0 = ncols++;
      r.col1 = ncols++;
    }
  }
  sf.num_structural = ncols;

  auto transform_row = [&](const std::vector<Rational>& coeffs, const Rational& b,
                           RowSense s) {
    InternalRow row;
    row.coeffs.assign(ncols, Rational(0));
    row.rhs = b;
    row.sense = s;
    for (int j = 0; j < k; ++j) {
      if (coeffs[j] == 0) continue;
      const VarRecipe& r = sf.recipes[j];
      switch (r.kind) {
        case VarRecipe::Kind::ShiftLower:
          row.coeffs[r.col0] += coeffs[j];
          row.rhs -= coeffs[j] * r.offset;
          break;
        case VarRecipe::Kind::NegShiftUpper:
          row.coeffs[r.col0] -= coeffs[j];
          row.rhs -= coeffs[j] * r.offset;
          break;
        case VarRecipe::Kind::Split:
          row.coeffs[r.col0] += coeffs[j];
          row.coeffs[r.col1] -= coeffs[j];
          break;
      }
    }
    return row;
  };

  for (int i = 0; i < m; ++i) {
    if (folded[i]) continue;
    InternalRow row = transform_row(p.a.row(i), p.rhs[i], p.row_sense(i));
    row.orig_row = i;
    sf.rows.push_back(std::move(row));
  }
  // Upper-bound rows for variables shifted at their lower bound.
  for (int j = 0; j < k; ++j) {
    if (sf.recipes[j].kind != VarRecipe::Kind::ShiftLower || !upper[j].present)
      continue;
    InternalRow row;
    row.coeffs.assign(ncols, Rational(0));
    row.coeffs[sf.recipes[j].col0] = 1;
    row.rhs = upper[j].value - lower[j].value;
    row.sense = RowSense::LE;
    row.provider_row = upper[j].provider_row;
    row.provider_coeff = upper[j].provider_coeff;
    sf.rows.push_back(std::move(row));
  }

  // Objective in max form over structural columns.
  sf.objective.assign(ncols, Rational(0));
  for (int j = 0; j < k; ++j) {
    Rational c = p.objective[j];
    if (sf.maximize_negated) c = -c;
    if (c == 0) continue;
    const VarRecipe& r = sf.recipes[j];
    switch (r.kind) {
      case VarRecipe::Kind::ShiftLower:
        sf.objective[r.col0] += c;
        break;
      case VarRecipe::Kind::NegShiftUpper:
        sf.objective[r.col0] -= c;
        break;
      case VarRecipe::Kind::Split:
        sf.objective[r.col0] += c;
        sf.objective[r.col1] -= c;
        break;
    }
  }
  return sf;
}

// ---------------------------------------------------------------------------
// Tableau engines
// ---------------------------------------------------------------------------

struct FfOverflow {};

// Entries are kept below 2^62 so that cross-products and their differences
// stay within __int128.
constexpr int64_t kFfLimit = int64_t(1) << 62;

// (a*b - c*e) / d with exact division, int64 storage.
struct I64Ops {
  using Int = int64_t;
  static Int mul_sub_div(Int a, Int b, Int c, Int e, Int d) {
    __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * e;
    v /= d;
    if (v > kFfLimit || v < -kFfLimit) throw FfOverflow{};
    return static_cast<Int>(v);
  }
  static bool ratio_less(Int b1, Int a1, Int b2, Int a2) {
    return static_cast<__int128>(b1) * a2 < static_cast<__int128>(b2) * a1;
  }
  static Rational to_rational(Int num, Int den) {
    return Rational(static_cast<long long>(num)) /
           Rational(static_cast<long long>(den));
  }
  static bool fits(const BigInt& v) { return v <= kFfLimit && v >= -kFfLimit; }
  static Int from_bigint(const BigInt& v) { return v.convert_to<int64_t>(); }
};

struct BigOps {
  using Int = BigInt;
  static Int mul_sub_div(const Int& a, const Int& b, const Int& c, const Int& e,
                         const Int& d) {
    return (a * b - c * e) / d;
  }
  static bool ratio_less(const Int& b1, const Int& a1, const Int& b2, const Int& a2) {
    return b1 * a2 < b2 * a1;
  }
  static Rational to_rational(const Int& num, const Int& den) {
    return Rational(num) / Rational(den);
  }
  static bool fits(const BigInt&) { return true; }
  static Int from_bigint(const BigInt& v) { return v; }
};

// Fraction-free integer tableau: real value of any cell is T(i,j) / den.
// Pivots use the Schur-complement identity, so entries stay integral.
template <class Ops>
class FfTableau {
 public:
  using Int = typename Ops::Int;
  static constexpr bool kExact = true;

  // rows: per-row integer-scaled data (sigma applied so rhs >= 0).
  // All-rows layout: [structural | slacks | artificials | rhs].
  FfTableau(const std::vector<std::vector<BigInt>>& scaled_rows,
            const std::vector<BigInt>& scaled_rhs,
            const std::vector<RowSense>& senses,
            const std::vector<BigInt>& scaled_obj)
      : m_(static_cast<int>(scaled_rows.size())),
        ns_(static_cast<int>(scaled_obj.size())) {
    slack_col_.assign(m_, -1);
    int nslack = 0;
    for (int i = 0; i < m_; ++i)
      if (senses[i] == RowSense::LE) slack_col_[i] = ns_ + nslack++;
    art_col_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) art_col_[i] = ns_ + nslack + i;
    ncols_ = ns_ + nslack + m_;
    rhs_col_ = ncols_;
    width_ = ncols_ + 1;

    t_.assign(static_cast<size_t>(m_ + 2) * width_, Int(0));
    den_ = Int(1);
    basis_of_row_.assign(m_, -1);
    row_of_col_.assign(ncols_, -1);

    for (int i = 0; i < m_; ++i) {
      bool flip = scaled_rhs[i] < 0;
      sigma_.push_back(flip ? -1 : 1);
      for (int j = 0; j < ns_; ++j) {
        BigInt v = flip ? BigInt(-scaled_rows[i][j]) : scaled_rows[i][j];
        if (!Ops::fits(v)) throw FfOverflow{};
        at(i, j) = Ops::from_bigint(v);
      }
      BigInt b = flip ? BigInt(-scaled_rhs[i]) : scaled_rhs[i];
      if (!Ops::fits(b)) throw FfOverflow{};
      at(i, rhs_col_) = Ops::from_bigint(b);
      if (slack_col_[i] >= 0) at(i, slack_col_[i]) = flip ? Int(-1) : Int(1);
      at(i, art_col_[i]) = Int(1);
      // Initial basis: usable slack, else artificial.
      if (slack_col_[i] >= 0 && !flip) {
        set_basis(i, slack_col_[i]);
      } else {
        set_basis(i, art_col_[i]);
        art_basic_rows_.push_back(i);
      }
    }
    // Phase-2 objective row: z_j = -c_j.
    for (int j = 0; j < ns_; ++j) {
      if (!Ops::fits(scaled_obj[j])) throw FfOverflow{};
      at(m_, j) = Ops::from_bigint(BigInt(-scaled_obj[j]));
    }
    // Phase-1 objective row over artificial-basic rows; accumulated wide to
    // avoid init-time overflow.
    {
      std::vector<BigInt> acc(width_, BigInt(0));
      for (int i : art_basic_rows_)
        for (int j = 0; j < width_; ++j) acc[j] -= BigInt(at(i, j));
      for (int i = 0; i < m_; ++i) acc[art_col_[i]] += 1;
      for (int j = 0; j < width_; ++j) {
        if (!Ops::fits(acc[j])) throw FfOverflow{};
        at(m_ + 1, j) = Ops::from_bigint(acc[j]);
      }
    }
    obj_row_ = m_;
  }

  bool needs_phase1() const { return !art_basic_rows_.empty(); }
  void set_phase(int phase) { obj_row_ = phase == 1 ? m_ + 1 : m_; }
  int num_rows() const { return m_; }
  int num_cols() const { return ncols_; }
  bool is_artificial(int col) const { return col >= ns_ + num_slacks(); }
  int num_slacks() const { return ncols_ - ns_ - m_; }
  int basis_var(int row) const { return basis_of_row_[row]; }

  int sign_z(int j) const {
    const Int& v = at(obj_row_, j);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  bool z_less(int j1, int j2) const { return at(obj_row_, j1) < at(obj_row_, j2); }
  int sign_entry(int i, int j) const {
    const Int& v = at(i, j);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  bool rhs_zero(int i) const { return at(i, rhs_col_) == 0; }
  bool ratio_less(int r1, int r2, int s) const {
    return Ops::ratio_less(at(r1, rhs_col_), at(r1, s), at(r2, rhs_col_), at(r2, s));
  }
  bool phase1_objective_negative() const { return at(m_ + 1, rhs_col_) < 0; }

  void pivot(int r, int s) {
    const Int pivot_val = at(r, s);
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r) continue;
      Int* row = &t_[static_cast<size_t>(i) * width_];
      const Int* prow = &t_[static_cast<size_t>(r) * width_];
      const Int fac = row[s];
      for (int j = 0; j < width_; ++j)
        row[j] = Ops::mul_sub_div(pivot_val, row[j], fac, prow[j], den_);
    }
    den_ = pivot_val;
    if (den_ < 0) {
      for (auto& v : t_) v = -v;
      den_ = -den_;
    }
    int old = basis_of_row_[r];
    if (old >= 0) row_of_col_[old] = -1;
    set_basis(r, s);
  }

  // Pivots remaining basic artificials onto any usable column; rows that
  // are entirely zero keep their artificial at level zero.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_of_row_[i])) continue;
      int target = -1;
      for (int j = 0; j < ns_ + num_slacks(); ++j) {
        if (row_of_col_[j] >= 0) continue;
        if (at(i, j) != 0) {
          target = j;
          break;
        }
      }
      if (target >= 0) pivot(i, target);
    }
  }

  Rational rhs_value(int i) const { return Ops::to_rational(at(i, rhs_col_), den_); }
  Rational z_value(int j) const { return Ops::to_rational(at(m_, j), den_); }
  Rational z1_value(int j) const { return Ops::to_rational(at(m_ + 1, j), den_); }
  Rational col_value(int col) const {
    int r = row_of_col_[col];
    return r < 0 ? Rational(0) : rhs_value(r);
  }

 private:
  Int& at(int i, int j) { return t_[static_cast<size_t>(i) * width_ + j]; }
  const Int& at(int i, int j) const { return t_[static_cast<size_t>(i) * width_ + j]; }
  void set_basis(int row, int col) {
    basis_of_row_[row] = col;
    row_of_col_[col] = row;
  }

  int m_, ns_, ncols_ = 0, rhs_col_ = 0, width_ = 0, obj_row_ = 0;
  std::vector<Int> t_;
  Int den_;
  std::vector<int> basis_of_row_, row_of_col_, slack_col_, art_col_;
  std::vector<int> sigma_;
  std::vector<int> art_basic_rows_;

 public:
  int sigma(int i) const { return sigma_[i]; }
  int art_col(int i) const { return art_col_[i]; }
};

// Floating-point tableau with the same layout and pivoting discipline.
class DoubleTableau {
 public:
  static constexpr bool kExact = false;

  DoubleTableau(const std::vector<std::vector<double>>& rows,
                const std::vector<double>& rhs, const std::vector<RowSense>& senses,
                const std::vector<double>& obj, double feas_tol, double opt_tol)
      : m_(static_cast<int>(rows.size())), ns_(static_cast<int>(obj.size())),
        price_eps_(std::max(1e-12, opt_tol * 1e-2)),
        pivot_eps_(std::max(1e-11, feas_tol * 1e-2)) {
    slack_col_.assign(m_, -1);
    int nslack = 0;
    for (int i = 0; i < m_; ++i)
      if (senses[i] == RowSense::LE) slack_col_[i] = ns_ + nslack++;
    art_col_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) art_col_[i] = ns_ + nslack + i;
    ncols_ = ns_ + nslack + m_;
    rhs_col_ = ncols_;
    width_ = ncols_ + 1;

    t_.assign(static_cast<size_t>(m_ + 2) * width_, 0.0);
    basis_of_row_.assign(m_, -1);
    row_of_col_.assign(ncols_, -1);

    for (int i = 0; i < m_; ++i) {
      bool flip = rhs[i] < 0;
      sigma_.push_back(flip ? -1 : 1);
      for (int j = 0; j < ns_; ++j) at(i, j) = flip ? -rows[i][j] : rows[i][j];
      at(i, rhs_col_) = flip ? -rhs[i] : rhs[i];
      if (slack_col_[i] >= 0) at(i, slack_col_[i]) = flip ? -1.0 : 1.0;
      at(i, art_col_[i]) = 1.0;
      if (slack_col_[i] >= 0 && !flip) {
        set_basis(i, slack_col_[i]);
      } else {
        set_basis(i, art_col_[i]);
        art_basic_rows_.push_back(i);
      }
    }
    for (int j = 0; j < ns_; ++j) at(m_, j) = -obj[j];
    for (int i : art_basic_rows_)
      for (int j = 0; j < width_; ++j) at(m_ + 1, j) -= at(i, j);
    for (int i = 0; i < m_; ++i) at(m_ + 1, art_col_[i]) += 1.0;
    obj_row_ = m_;
  }

  bool needs_phase1() const { return !art_basic_rows_.empty(); }
  void set_phase(int phase) { obj_row_ = phase == 1 ? m_ + 1 : m_; }
  int num_rows() const { return m_; }
  int num_cols() const { return ncols_; }
  bool is_artificial(int col) const { return col >= ns_ + num_slacks(); }
  int num_slacks() const { return ncols_ - ns_ - m_; }
  int basis_var(int row) const { return basis_of_row_[row]; }

  int sign_z(int j) const {
    double v = at(obj_row_, j);
    return v > price_eps_ ? 1 : (v < -price_eps_ ? -1 : 0);
  }
  bool z_less(int j1, int j2) const { return at(obj_row_, j1) < at(obj_row_, j2); }
  int sign_entry(int i, int j) const {
    double v = at(i, j);
    return v > pivot_eps_ ? 1 : (v < -pivot_eps_ ? -1 : 0);
  }
  bool rhs_zero(int i) const { return std::fabs(at(i, rhs_col_)) <= 1e-12; }
  bool ratio_less(int r1, int r2, int s) const {
    return at(r1, rhs_col_) / at(r1, s) < at(r2, rhs_col_) / at(r2, s);
  }
  bool phase1_objective_negative() const {
    // Residual infeasibility beyond tolerance.
    return at(m_ + 1, rhs_col_) < -1e-7;
  }

  void pivot(int r, int s) {
    double pivot_val = at(r, s);
    if (std::fabs(pivot_val) < pivot_eps_)
      throw NumericalBreakdown("pivot magnitude below threshold");
    double inv = 1.0 / pivot_val;
    double* prow = &t_[static_cast<size_t>(r) * width_];
    for (int j = 0; j < width_; ++j) prow[j] *= inv;
    prow[s] = 1.0;
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r) continue;
      double* row = &t_[static_cast<size_t>(i) * width_];
      double fac = row[s];
      if (fac == 0.0) continue;
      for (int j = 0; j < width_; ++j) row[j] -= fac * prow[j];
      row[s] = 0.0;
    }
    int old = basis_of_row_[r];
    if (old >= 0) row_of_col_[old] = -1;
    set_basis(r, s);
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_of_row_[i])) continue;
      int target = -1;
      for (int j = 0; j < ns_ + num_slacks(); ++j) {
        if (row_of_col_[j] >= 0) continue;
        if (std::fabs(at(i, j)) > pivot_eps_ * 10) {
          target = j;
          break;
        }
      }
      if (target >= 0) pivot(i, target);
    }
  }

  Rational rhs_value(int i) const { return from_double(at(i, rhs_col_)); }
  Rational z_value(int j) const { return from_double(at(m_, j)); }
  Rational z1_value(int j) const { return from_double(at(m_ + 1, j)); }
  Rational col_value(int col) const {
    int r = row_of_col_[col];
    return r < 0 ? Rational(0) : rhs_value(r);
  }

  int sigma(int i) const { return sigma_[i]; }
  int art_col(int i) const { return art_col_[i]; }

 private:
  double& at(int i, int j) { return t_[static_cast<size_t>(i) * width_ + j]; }
  const double& at(int i, int j) const {
    return t_[static_cast<size_t>(i) * width_ + j];
  }
  void set_basis(int row, int col) {
    basis_of_row_[row] = col;
    row_of_col_[col] = row;
  }

  int m_, ns_, ncols_ = 0, rhs_col_ = 0, width_ = 0, obj_row_ = 0;
  double price_eps_, pivot_eps_;
  std::vector<double> t_;
  std::vector<int> basis_of_row_, row_of_col_, slack_col_, art_col_;
  std::vector<int> sigma_;
  std::vector<int> art_basic_rows_;
};

// ---------------------------------------------------------------------------
// Simplex core, shared by all tableaux
// ---------------------------------------------------------------------------

constexpr int kDegenerateStreakLimit = 40;
constexpr long kIterationCap = 200000;

template <class TB>
int pick_entering(const TB& tb, bool bland) {
  int best = -1;
  const int limit = tb.num_cols();
  for (int j = 0; j < limit; ++j) {
    if (tb.is_artificial(j)) continue;
    if (tb.sign_z(j) >= 0) continue;
    if (bland) return j;
    if (best < 0 || tb.z_less(j, best)) best = j;
  }
  return best;
}

template <class TB>
int pick_leaving(const TB& tb, int s) {
  int best = -1;
  for (int i = 0; i < tb.num_rows(); ++i) {
    if (tb.sign_entry(i, s) <= 0) continue;
    if (best < 0 || tb.ratio_less(i, best, s)) {
      best = i;
    } else if (!tb.ratio_less(best, i, s) && tb.basis_var(i) < tb.basis_var(best)) {
      best = i;  // tie: lowest basis variable index (anti-cycling aide)
    }
  }
  return best;
}

template <class TB>
bool optimize_phase(TB& tb, long& iterations) {
  bool bland = false;
  int degen_streak = 0;
  for (;;) {
    if (iterations > kIterationCap) throw Error("simplex iteration cap exceeded");
    int s = pick_entering(tb, bland);
    if (s < 0) return true;
    int r = pick_leaving(tb, s);
    if (r < 0) return false;
    bool degenerate = tb.rhs_zero(r);
    tb.pivot(r, s);
    ++iterations;
    if (degenerate) {
      if (++degen_streak > kDegenerateStreakLimit) bland = true;
    } else {
      degen_streak = 0;
      // A productive pivot resets anti-cycling to the fast rule.
      bland = false;
    }
  }
}

template <class TB>
LpStatus run_core(TB& tb, long& iterations) {
  if (tb.needs_phase1()) {
    tb.set_phase(1);
    if (!optimize_phase(tb, iterations))
      throw Error("phase-1 objective unbounded");  // cannot happen
    if (tb.phase1_objective_negative()) return LpStatus::Infeasible;
    tb.drive_out_artificials();
  }
  tb.set_phase(2);
  if (!optimize_phase(tb, iterations)) return LpStatus::Unbounded;
  return LpStatus::Optimal;
}

// ---------------------------------------------------------------------------
// Recovery back to the original problem
// ---------------------------------------------------------------------------

// Row scale factors lambda (sf row -> positive rational) applied before
// integer conversion; identity for the double engine.
struct RowScaling {
  std::vector<Rational> row_scale;
  Rational obj_scale = Rational(1);
};

template <class TB>
LpSolution recover(const LpProblem& p, const StandardForm& sf, const TB& tb,
                   const RowScaling& sc, LpStatus status, long iterations) {
  LpSolution out;
  out.status = status;
  out.iterations = iterations;
  const int k = p.num_vars();
  const int m = p.num_rows();

  if (status == LpStatus::Infeasible) {
    // Farkas from phase-1 duals: y1_i = z1[art_i] - 1; certificate rows get
    // lambda_orig = sigma_i * y1_i * scale, which is >= 0 on LE rows at the
    // phase-1 optimum.
    out.farkas.assign(m, Rational(0));
    for (size_t ri = 0; ri < sf.rows.size(); ++ri) {
      const InternalRow& row = sf.rows[ri];
      Rational y1 = tb.z1_value(tb.art_col(static_cast<int>(ri))) - 1;
      Rational lambda = y1 * tb.sigma(static_cast<int>(ri)) * sc.row_scale[ri];
      if (lambda == 0) continue;
      if (row.orig_row >= 0) {
        out.farkas[row.orig_row] += lambda;
      } else if (row.provider_row >= 0) {
        out.farkas[row.provider_row] += lambda / row.provider_coeff;
      }
    }
    // Cancel the residual combination on variables whose bound came from a
    // folded singleton row, so the certificate stands on rows alone wherever
    // possible (explicit bounds absorb whatever remains).
    {
      std::vector<Rational> v = p.a.mul_transposed(out.farkas);
      for (int j = 0; j < k; ++j) {
        if (v[j] == 0) continue;
        const VarRecipe& r = sf.recipes[j];
        if (r.shift_provider_row < 0) continue;
        bool lower_side = r.kind == VarRecipe::Kind::ShiftLower;
        if ((v[j] > 0 && lower_side) || (v[j] < 0 && !lower_side))
          out.farkas[r.shift_provider_row] += -v[j] / r.shift_provider_coeff;
      }
    }
    return out;
  }
  if (status == LpStatus::Unbounded) return out;

  // Primal solution.
  out.x.assign(k, Rational(0));
  for (int j = 0; j < k; ++j) {
    const VarRecipe& r = sf.recipes[j];
    switch (r.kind) {
      case VarRecipe::Kind::ShiftLower:
        out.x[j] = tb.col_value(r.col0) + r.offset;
        break;
      case VarRecipe::Kind::NegShiftUpper:
        out.x[j] = r.offset - tb.col_value(r.col0);
        break;
      case VarRecipe::Kind::Split:
        out.x[j] = tb.col_value(r.col0) - tb.col_value(r.col1);
        break;
    }
  }
  out.objective_value = dot(p.objective, out.x);
  for (int i = 0; i < tb.num_rows(); ++i) out.basis.push_back(tb.basis_var(i));
  std::sort(out.basis.begin(), out.basis.end());

  // Duals: y_i = z2 value at the artificial column of row i (its cost is 0),
  // then unscale and route bound rows to their providers.
  // The objective scaling divides out; row scaling multiplies in.
  out.duals.assign(m, Rational(0));
  for (size_t ri = 0; ri < sf.rows.size(); ++ri) {
    const InternalRow& row = sf.rows[ri];
    Rational y = tb.z_value(tb.art_col(static_cast<int>(ri)));
    Rational eta = y * tb.sigma(static_cast<int>(ri)) * sc.row_scale[ri] / sc.obj_scale;
    if (eta == 0) continue;
    if (row.orig_row >= 0) {
      out.duals[row.orig_row] += eta;
    } else if (row.provider_row >= 0) {
      out.duals[row.provider_row] += eta / row.provider_coeff;
    }
  }
  // Residual stationarity charged to the singleton rows realized as shifts.
  // Everything here is in the internal max form; the Min sign flip happens
  // at the very end.
  {
    std::vector<Rational> atd = p.a.mul_transposed(out.duals);
    for (int j = 0; j < k; ++j) {
      Rational c = p.objective[j];
      if (sf.maximize_negated) c = -c;
      Rational g = c - atd[j];
      if (g == 0) continue;
      const VarRecipe& r = sf.recipes[j];
      if (r.shift_provider_row < 0) continue;
      out.duals[r.shift_provider_row] += g / r.shift_provider_coeff;
    }
  }
  if (sf.maximize_negated)
    for (auto& d : out.duals) d = -d;
  return out;
}

std::vector<std::optional<Rational>> effective_lower(const LpProblem& p) {
  std::vector<std::optional<Rational>> lo(p.num_vars());
  if (!p.lower.empty()) lo = p.lower;
  return lo;
}
std::vector<std::optional<Rational>> effective_upper(const LpProblem& p) {
  std::vector<std::optional<Rational>> up(p.num_vars());
  if (!p.upper.empty()) up = p.upper;
  return up;
}

LpSolution solve_exact_mode(const LpProblem& p, const StandardForm& sf) {
  const int nrows = static_cast<int>(sf.rows.size());
  RowScaling sc;
  sc.row_scale.assign(nrows, Rational(1));

  // Scale every row and the objective to integers.
  std::vector<std::vector<BigInt>> irows(nrows);
  std::vector<BigInt> irhs(nrows);
  std::vector<RowSense> senses(nrows);
  for (int i = 0; i < nrows; ++i) {
    const InternalRow& row = sf.rows[i];
    BigInt l = 1;
    for (const auto& c : row.coeffs)
      if (!c.is_zero() && denominator(c) != 1) l = lcm(l, BigInt(denominator(c)));
    if (denominator(row.rhs) != 1) l = lcm(l, BigInt(denominator(row.rhs)));
    sc.row_scale[i] = Rational(l);
    Rational rl(l);
    irows[i].reserve(row.coeffs.size());
    for (const auto& c : row.coeffs)
      irows[i].push_back(c.is_zero() ? BigInt(0) : BigInt(numerator(Rational(c * rl))));
    irhs[i] = BigInt(numerator(Rational(row.rhs * rl)));
    senses[i] = row.sense;
  }
  BigInt lobj = 1;
  for (const auto& c : sf.objective)
    if (!c.is_zero() && denominator(c) != 1) lobj = lcm(lobj, BigInt(denominator(c)));
  sc.obj_scale = Rational(lobj);
  Rational rlobj(lobj);
  std::vector<BigInt> iobj;
  iobj.reserve(sf.objective.size());
  for (const auto& c : sf.objective)
    iobj.push_back(c.is_zero() ? BigInt(0) : BigInt(numerator(Rational(c * rlobj))));

  long iterations = 0;
  try {
    FfTableau<I64Ops> tb(irows, irhs, senses, iobj);
    LpStatus st = run_core(tb, iterations);
    return recover(p, sf, tb, sc, st, iterations);
  } catch (const FfOverflow&) {
    iterations = 0;
    FfTableau<BigOps> tb(irows, irhs, senses, iobj);
    LpStatus st = run_core(tb, iterations);
    return recover(p, sf, tb, sc, st, iterations);
  }
}

LpSolution solve_float_mode(const LpProblem& p, const StandardForm& sf,
                            const NumericMode& mode) {
  const int nrows = static_cast<int>(sf.rows.size());
  RowScaling sc;
  sc.row_scale.assign(nrows, Rational(1));

  std::vector<std::vector<double>> drows(nrows);
  std::vector<double> drhs(nrows);
  std::vector<RowSense> senses(nrows);
  for (int i = 0; i < nrows; ++i) {
    const InternalRow& row = sf.rows[i];
    drows[i].reserve(row.coeffs.size());
    for (const auto& c : row.coeffs) drows[i].push_back(to_double(c));
    drhs[i] = to_double(row.rhs);
    senses[i] = row.sense;
  }
  std::vector<double> dobj;
  dobj.reserve(sf.objective.size());
  for (const auto& c : sf.objective) dobj.push_back(to_double(c));

  long iterations = 0;
  DoubleTableau tb(drows, drhs, senses, dobj, mode.feas_tol, mode.opt_tol);
  LpStatus st = run_core(tb, iterations);
  return recover(p, sf, tb, sc, st, iterations);
}

}  // namespace

LpSolution solve_lp(const LpProblem& p, const NumericMode& mode) {
  StandardForm sf = build_standard_form(p);
  if (sf.trivially_infeasible) {
    LpSolution out;
    out.status = LpStatus::Infeasible;
    out.farkas = sf.presolve_farkas;
    return out;
  }
  LpSolution sol =
      mode.is_exact() ? solve_exact_mode(p, sf) : solve_float_mode(p, sf, mode);
  if (mode.is_exact() && sol.status == LpStatus::Optimal) check_kkt_exact(p, sol);
  return sol;
}

LexStages solve_lexicographic_stages(const LpProblem& p,
                                     const std::vector<Rational>& secondary,
                                     const NumericMode& mode) {
  if (static_cast<int>(secondary.size()) != p.num_vars())
    throw DimensionError("secondary objective length mismatch");
  LexStages out;
  out.stage1 = solve_lp(p, mode);
  if (out.stage1.status != LpStatus::Optimal)
    throw Error("lexicographic solve requires a bounded, feasible primary LP");

  LpProblem p2 = p;
  Rational z1 = out.stage1.objective_value;
  if (mode.is_exact()) {
    p2.add_row(p.objective, RowSense::EQ, z1);
  } else {
    // Band: primary objective may not drop below its optimum minus opt_tol.
    std::vector<Rational> neg(p.objective);
    for (auto& c : neg) c = -c;
    Rational band = from_double(mode.opt_tol) * (1 + abs(z1));
    if (p.direction == OptDir::Max) {
      p2.add_row(neg, RowSense::LE, -(z1 - band));
    } else {
      p2.add_row(p.objective, RowSense::LE, z1 + band);
    }
  }
  p2.objective = secondary;
  p2.direction = OptDir::Max;
  out.stage2 = solve_lp(p2, mode);
  if (out.stage2.status != LpStatus::Optimal)
    throw Error("lexicographic stage 2 unexpectedly not optimal");
  out.stage2.duals.resize(p.num_rows());
  return out;
}

LpSolution solve_lexicographic(const LpProblem& p,
                               const std::vector<Rational>& secondary,
                               const NumericMode& mode) {
  return solve_lexicographic_stages(p, secondary, mode).stage2;
}

void check_kkt_exact(const LpProblem& p, const LpSolution& s) {
  if (s.status != LpStatus::Optimal) throw Error("kkt check on non-optimal solution");
  const int m = p.num_rows();
  const int k = p.num_vars();
  if (static_cast<int>(s.x.size()) != k) throw Error("kkt: x size");
  if (static_cast<int>(s.duals.size()) != m) throw Error("kkt: dual size");
  auto lo = effective_lower(p);
  auto up = effective_upper(p);

  std::vector<Rational> ax = p.a.mul(s.x);
  for (int i = 0; i < m; ++i) {
    if (p.row_sense(i) == RowSense::LE) {
      if (ax[i] > p.rhs[i]) throw Error("kkt: primal row violated");
    } else if (ax[i] != p.rhs[i]) {
      throw Error("kkt: primal equality violated");
    }
  }
  for (int j = 0; j < k; ++j) {
    if (lo[j] && s.x[j] < *lo[j]) throw Error("kkt: lower bound violated");
    if (up[j] && s.x[j] > *up[j]) throw Error("kkt: upper bound violated");
  }
  if (s.objective_value != dot(p.objective, s.x))
    throw Error("kkt: objective value mismatch");

  const int dir = p.direction == OptDir::Max ? 1 : -1;
  for (int i = 0; i < m; ++i) {
    if (p.row_sense(i) == RowSense::LE) {
      if (dir * s.duals[i] < 0) throw Error("kkt: dual sign");
      if (s.duals[i] != 0 && ax[i] != p.rhs[i])
        throw Error("kkt: complementary slackness");
    }
  }
  std::vector<Rational> atd = p.a.mul_transposed(s.duals);
  for (int j = 0; j < k; ++j) {
    Rational g = p.objective[j] - atd[j];
    bool at_lower = lo[j] && s.x[j] == *lo[j];
    bool at_upper = up[j] && s.x[j] == *up[j];
    Rational gd = g * dir;
    if (gd < 0 && !at_lower) throw Error("kkt: stationarity (lower)");
    if (gd > 0 && !at_upper) throw Error("kkt: stationarity (upper)");
  }
}

bool check_farkas_exact(const LpProblem& p, const std::vector<Rational>& farkas) {
  const int m = p.num_rows();
  const int k = p.num_vars();
  if (static_cast<int>(farkas.size()) != m) return false;
  for (int i = 0; i < m; ++i)
    if (p.row_sense(i) == RowSense::LE && farkas[i] < 0) return false;
  auto lo = effective_lower(p);
  auto up = effective_upper(p);
  std::vector<Rational> v = p.a.mul_transposed(farkas);
  Rational min_lhs(0);
  for (int j = 0; j < k; ++j) {
    if (v[j] > 0) {
      if (!lo[j]) return false;
      min_lhs += v[j] * *lo[j];
    } else if (v[j] < 0) {
      if (!up[j]) return false;
      min_lhs += v[j] * *up[j];
    }
  }
  return min_lhs > dot(farkas, p.rhs);
}

}  // namespace maxpareto
