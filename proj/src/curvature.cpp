#include "ncgeo/curvature.hpp"

#include "ncgeo/error.hpp"

namespace ncg {

LocModuleElement curvature_op(const RealMetricCalculus& calc, const Connection& conn,
                              std::size_t p, std::size_t q, const LocModuleElement& u) {
  LocModuleElement out = conn.nabla(calc, p, conn.nabla(calc, q, u));
  out = out - conn.nabla(calc, q, conn.nabla(calc, p, u));
  // nabla over the bracket via the structure constants (R-linearity)
  for (std::size_t r = 0; r < calc.lie.dim(); ++r) {
    const Rational& c = calc.lie.structure_constant(p, q, r);
    if (c != 0) {
      const LocModuleElement term = conn.nabla(calc, r, u);
      out = out - term * LocalizedElement(AlgebraElement::unit(calc.algebra) * Scalar(c));
    }
  }
  return out;
}

CurvatureTable::CurvatureTable(const RealMetricCalculus& calc, const Connection& conn)
    : id_(calc.algebra), rank_(calc.rank) {
  op_values_.assign(
      rank_, std::vector<std::vector<ModuleElement>>(
                 rank_, std::vector<ModuleElement>(rank_, zero_module_element(id_, rank_))));
  comps_.assign(rank_,
                std::vector<std::vector<std::vector<AlgebraElement>>>(
                    rank_, std::vector<std::vector<AlgebraElement>>(
                               rank_, std::vector<AlgebraElement>(rank_, AlgebraElement::zero(id_)))));
  for (std::size_t p = 0; p < rank_; ++p) {
    for (std::size_t q = 0; q < rank_; ++q) {
      for (std::size_t b = 0; b < rank_; ++b) {
        const LocModuleElement value =
            curvature_op(calc, conn, p, q, to_localized(basis_module_element(id_, rank_, b)));
        op_values_[p][q][b] = value.lift_to_base();
        for (std::size_t a = 0; a < rank_; ++a) {
          comps_[a][b][p][q] =
              calc.form.eval(to_localized(calc.e(a)), value).lift_to_base();
        }
      }
    }
  }
}

std::size_t CurvatureTable::nonzero_count() const {
  std::size_t count = 0;
  for (const auto& t1 : comps_) {
    for (const auto& t2 : t1) {
      for (const auto& t3 : t2) {
        for (const auto& v : t3) {
          if (!v.is_zero()) ++count;
        }
      }
    }
  }
  return count;
}

namespace {

std::string index_str(std::initializer_list<std::size_t> idx) {
  std::string out;
  for (std::size_t i : idx) out += std::to_string(i + 1);
  return out;
}

}  // namespace

SymmetryReport symmetry_suite(const CurvatureTable& table) {
  SymmetryReport report;
  const std::size_t n = table.rank();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          const AlgebraElement& r = table.component(a, b, p, q);
          AlgebraElement res = r + table.component(a, b, q, p);
          if (!res.is_zero()) {
            report.antisymmetry_last_pair = false;
            report.violations.push_back({"antisymmetry-last-pair", {a, b, p, q}, res.str()});
          }
          res = r + table.component(b, a, p, q);
          if (!res.is_zero()) {
            report.antisymmetry_first_pair = false;
            report.violations.push_back({"antisymmetry-first-pair", {a, b, p, q}, res.str()});
          }
          res = r - table.component(p, q, a, b);
          if (!res.is_zero()) {
            report.pair_interchange = false;
            report.violations.push_back({"pair-interchange", {a, b, p, q}, res.str()});
          }
          res = r.star() - r;
          if (!res.is_zero()) {
            report.components_hermitian = false;
            report.violations.push_back({"components-hermitian", {a, b, p, q}, res.str()});
          }
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t r = 0; r < n; ++r) {
          AlgebraElement res = table.component(a, p, q, r) + table.component(a, q, r, p) +
                               table.component(a, r, p, q);
          if (!res.is_zero()) {
            report.first_bianchi = false;
            report.violations.push_back({"first-bianchi", {a, p, q, r}, res.str()});
          }
        }
      }
    }
  }
  return report;
}

ScalarCurvature scalar_curvature(const CurvatureTable& table, const PseudoInverse& pinv) {
  const std::size_t n = table.rank();
  AlgebraElement contraction = AlgebraElement::zero(table.algebra());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q) {
          contraction += pinv.entry(a, b) * table.component(a, p, b, q) * pinv.entry(p, q);
        }
      }
    }
  }
  const LocalizedElement s_loc =
      pinv.divide_by_H(pinv.divide_by_H(LocalizedElement(contraction)));
  AlgebraElement S = s_loc.lift_to_base();
  if (!S.is_hermitian()) {
    raise(ErrorCode::not_pseudo_inverse, "scalar curvature is not hermitian: " + S.str());
  }
  if (pinv.H * S * pinv.H != contraction) {
    raise(ErrorCode::not_pseudo_inverse, "H S H does not reproduce the contraction");
  }
  return {std::move(S), std::move(contraction)};
}

}  // namespace ncg
