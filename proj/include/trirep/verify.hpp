#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trirep/io.hpp"
#include "trirep/repdim.hpp"

namespace trirep {

enum class Status { Verified, Refuted, Inconclusive };

std::string status_name(Status s);
// 0 verified, 1 refuted, 2 inconclusive
int exit_code(Status s);
// Refuted dominates, then inconclusive.
Status combine(const std::vector<Status>& parts);

struct Report {
  std::string claim;
  Json inputs;
  Status status = Status::Inconclusive;
  std::vector<std::string> witnesses;
  Json details = Json::object();
  // Field-independent numbers compared by the cross-field check.
  Json invariants = Json::object();
  double seconds = 0;

  // Key order is fixed; timing only on request.
  Json to_json(bool timing) const;
};

std::string inputs_digest(const Json& inputs);

struct CheckOptions {
  int cutoff = 10000;
  int jobs = 1;
  std::optional<std::string> tilting;  // restrict to one tilting module id
  int sample_dim = 24;                 // exact module size limit when T2 knitting does not finish
  int dim_bound = 8;
  int maxlen = 1;
};

template <class F>
Report indec_report(const QuiverPresentation& q, const CheckOptions& o);
template <class F>
Report tiltings_report(const QuiverPresentation& q, const CheckOptions& o);
template <class F>
Report thm31_report(const QuiverPresentation& q, const CheckOptions& o);
template <class F>
Report thm32_report(const QuiverPresentation& q, const CheckOptions& o);
template <class F>
Report lemma43_report(const QuiverPresentation& q, const CheckOptions& o);
template <class F>
Report thm41_report(const QuiverPresentation& q, const CheckOptions& o);
template <class F>
Report thm47_report(const QuiverPresentation& q, const CheckOptions& o);
template <class F>
Report cor44_report(const QuiverPresentation& q, const CheckOptions& o);
// bundle: {"modules": [module json, ...]} over the path algebra of q.
template <class F>
Report repdim_report(const QuiverPresentation& q, const Json& bundle, const CheckOptions& o);
// The E6 orientation with all arms pointing at the branch vertex and its APR tilt.
template <class F>
Report e6_report(const CheckOptions& o);

QuiverPresentation e6_quiver();

// Tits form of an acyclic algebra on its Gabriel quiver, with one term per
// minimal relation.
template <class F>
Index tits_form(const Algebra<F>& a, const std::vector<Index>& x);
// A nonzero vector with entries in 0..bound where the form is <= 0.
template <class F>
std::optional<std::vector<Index>> tits_form_witness(const Algebra<F>& a, int bound);

// Compares invariants of a rational run and a prime-field run; the result is
// attached to `rational` under details.field_check, and a mismatch refutes.
void attach_field_check(Report& rational, const Report& prime);

}  // namespace trirep
