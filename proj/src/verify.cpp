#include "pgq/verify.hpp"

#include "pgq/biderivations.hpp"
#include "pgq/centroid.hpp"
#include "pgq/derivations.hpp"

namespace pgq {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skipped";
    default: return "info";
  }
}

namespace {

const char* yn(bool b) { return b ? "true" : "false"; }

CheckResult make(std::string name, bool ok, std::string detail) {
  return CheckResult{std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

CheckResult skip(std::string name, std::string reason) {
  return CheckResult{std::move(name), CheckStatus::skip, std::move(reason)};
}

CheckResult note(std::string name, std::string detail) {
  return CheckResult{std::move(name), CheckStatus::info, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_battery(const StructureTensor& sc, const BatteryOptions& opt) {
  std::vector<CheckResult> out;

  bool id_ok = e0_is_identity(sc);
  bool assoc_ok = basis_products_associative(sc);
  out.push_back(make("identity-and-associativity", id_ok && assoc_ok,
                     std::string("identity=") + yn(id_ok) + " associativity=" + yn(assoc_ok)));

  // Closed-form checks need a parameter triple that actually produced this table.
  bool have_params = sc.params.has_value() && make_3pgq(*sc.params).c == sc.c;
  Params p = have_params ? *sc.params : Params{};
  bool l12 = have_params && !(p.l1 * p.l2).is_zero();
  bool l3nz = have_params && !p.l3.is_zero();
  std::string base_reason = !sc.params              ? "no parameter triple given"
                            : !have_params          ? "table does not match the parameter triple"
                            : !l12                  ? "requires l1 l2 != 0"
                                                    : "requires l3 != 0";

  Subspace der = derivation_space(sc);

  if (l12 && l3nz) {
    bool ok = der.dim() == 3;
    for (const Matrix& d : subspace_maps(der)) ok = ok && matches_derivation_pattern(p, d, true);
    out.push_back(make("derivation-matrix-form", ok, "dim=" + std::to_string(der.dim())));
    out.push_back(make("derivation-wedge-basis", verify_ad_basis(p), "dim=" + std::to_string(der.dim())));
  } else {
    out.push_back(skip("derivation-matrix-form", base_reason));
    out.push_back(skip("derivation-wedge-basis", base_reason));
    out.push_back(note("derivation-dim", "dim=" + std::to_string(der.dim())));
  }

  Subspace probe = local_probe_space(sc, standard_probes());
  if (l12 && l3nz) {
    LocalReport local = verify_local_theorem(p);
    out.push_back(make("local-derivations-are-derivations", local.equal,
                       "probe_dim=" + std::to_string(local.probe_dim) + " der_dim=" + std::to_string(local.der_dim)));
  } else {
    out.push_back(skip("local-derivations-are-derivations", base_reason));
    out.push_back(note("local-probe-gap", "probe_dim=" + std::to_string(probe.dim()) +
                                              " der_dim=" + std::to_string(der.dim()) +
                                              " strict_containment=" + yn(probe.dim() > der.dim())));
  }

  if (l12 && l3nz) {
    TwoLocalReport r = verify_two_local_theorem(p, opt.trials, opt.seed);
    out.push_back(make("two-local-implication", r.implication_held,
                       "trials=" + std::to_string(r.trials) + " pairwise_ok=" + std::to_string(r.pairwise_ok) +
                           " global_ok=" + std::to_string(r.global_ok) + " seed=" + std::to_string(r.seed)));
  } else {
    out.push_back(skip("two-local-implication", base_reason));
  }

  Subspace bider = biderivation_space(sc);
  auto [sym, skew_part] = split_symmetric_skew(bider);
  if (l12 && l3nz) {
    bool ok = bider.dim() == 1 && bider == Subspace::span(64, {flatten_tensor(wedge_tensor(p))});
    out.push_back(make("biderivation-wedge-form", ok, "dim=" + std::to_string(bider.dim())));
    out.push_back(skip("skew-biderivation-families", "requires l3 = 0"));
    out.push_back(skip("symmetric-biderivation-pattern", "requires l3 = 0"));
  } else if (l12 && !l3nz) {
    auto [fa, fb] = skew_family_lambda3_zero(p);
    Subspace family = Subspace::span(64, {flatten_tensor(fa), flatten_tensor(fb)});
    out.push_back(skip("biderivation-wedge-form", "requires l3 != 0"));
    out.push_back(make("skew-biderivation-families", skew_part.dim() == 2 && skew_part == family,
                       "skew_dim=" + std::to_string(skew_part.dim())));
    out.push_back(make("symmetric-biderivation-pattern", symmetric_pattern_family(p).contains(sym),
                       "symmetric_dim=" + std::to_string(sym.dim())));
  } else {
    out.push_back(skip("biderivation-wedge-form", base_reason));
    out.push_back(skip("skew-biderivation-families", base_reason));
    out.push_back(skip("symmetric-biderivation-pattern", base_reason));
    out.push_back(note("biderivation-dim", "dim=" + std::to_string(bider.dim()) +
                                               " symmetric_dim=" + std::to_string(sym.dim()) +
                                               " skew_dim=" + std::to_string(skew_part.dim())));
  }

  CommutingReport commuting = commuting_space(sc);
  Subspace cent = centroid(sc);
  Subspace qcent = quasi_centroid(sc);
  Subspace scalars = Subspace::span(16, {flatten_map(Matrix::identity(4))});
  std::string dims_detail = "commuting_dim=" + std::to_string(commuting.dim) +
                            " pattern_ok=" + std::string(yn(commuting.pattern_ok)) +
                            " quasi_centroid_dim=" + std::to_string(qcent.dim()) +
                            " centroid_dim=" + std::to_string(cent.dim());
  if (l12 && l3nz) {
    out.push_back(make("commuting-map-form", commuting.pattern_ok && commuting.dim == 5,
                       "dim=" + std::to_string(commuting.dim) + " pattern_ok=" + yn(commuting.pattern_ok)));
    out.push_back(make("quasi-centroid-scalar", qcent == scalars, "dim=" + std::to_string(qcent.dim())));
    out.push_back(make("centroid-scalar", cent == scalars, "dim=" + std::to_string(cent.dim())));
  } else {
    out.push_back(skip("commuting-map-form", base_reason));
    out.push_back(skip("quasi-centroid-scalar", base_reason));
    out.push_back(skip("centroid-scalar", base_reason));
    out.push_back(note("centroid-suite-dims", dims_detail));
  }

  out.push_back(make("centroid-derivation-compatibility", verify_gamma_der_lemma(sc, opt.trials, opt.seed),
                     "trials=" + std::to_string(opt.trials) + " seed=" + std::to_string(opt.seed)));

  return out;
}

bool battery_passed(const std::vector<CheckResult>& results) {
  for (const CheckResult& r : results)
    if (r.status == CheckStatus::fail) return false;
  return true;
}

}  // namespace pgq
