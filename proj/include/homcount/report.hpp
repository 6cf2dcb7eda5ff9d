#pragma once

// Line-oriented serialization of sweep reports.
//
// Cyclic JSONL keys, in this order:
//   n, omega, phi, ring_homs, surj_homs, divides, exceptional, agrees
// Product JSONL keys, in this order:
//   moduli, ring_homs, max_order, divides, failure_condition, class, verified
// CSV uses the same fields with a header row. In product CSV the moduli are
// joined with 'x' ("2x3") so no field needs quoting.
//
// Counts are written as full decimal integers. No timestamps.

#include <ostream>
#include <string>

#include "homcount/divisibility.hpp"

namespace homcount {

inline constexpr std::string_view cyclic_csv_header =
    "n,omega,phi,ring_homs,surj_homs,divides,exceptional,agrees";
inline constexpr std::string_view product_csv_header =
    "moduli,ring_homs,max_order,divides,failure_condition,class,verified";

namespace detail {

inline const char* json_bool(bool b) { return b ? "true" : "false"; }

}  // namespace detail

inline void write_jsonl(std::ostream& out, const ClassificationRecord& r) {
  out << "{\"n\":" << r.n << ",\"omega\":" << r.omega << ",\"phi\":" << r.phi
      << ",\"ring_homs\":" << r.ring_hom_count << ",\"surj_homs\":" << r.surj_hom_count
      << ",\"divides\":" << detail::json_bool(r.divides)
      << ",\"exceptional\":" << detail::json_bool(r.exceptional)
      << ",\"agrees\":" << detail::json_bool(r.agrees) << "}\n";
}

inline void write_csv_row(std::ostream& out, const ClassificationRecord& r) {
  out << r.n << ',' << r.omega << ',' << r.phi << ',' << r.ring_hom_count << ','
      << r.surj_hom_count << ',' << detail::json_bool(r.divides) << ','
      << detail::json_bool(r.exceptional) << ',' << detail::json_bool(r.agrees) << '\n';
}

inline void write_jsonl(std::ostream& out, const ProductDivisibilityRecord& r) {
  out << "{\"moduli\":[" << r.moduli.descriptor(',') << "],\"ring_homs\":" << r.ring_hom_count
      << ",\"max_order\":" << r.max_order_count << ",\"divides\":" << detail::json_bool(r.divides)
      << ",\"failure_condition\":" << detail::json_bool(r.failure_condition) << ",\"class\":\""
      << to_string(r.classification) << "\",\"verified\":" << detail::json_bool(r.verified())
      << "}\n";
}

inline void write_csv_row(std::ostream& out, const ProductDivisibilityRecord& r) {
  out << r.moduli.descriptor('x') << ',' << r.ring_hom_count << ',' << r.max_order_count << ','
      << detail::json_bool(r.divides) << ',' << detail::json_bool(r.failure_condition) << ','
      << to_string(r.classification) << ',' << detail::json_bool(r.verified()) << '\n';
}

template <class Report>
void write_jsonl(std::ostream& out, const Report& report) {
  for (const auto& r : report.records) write_jsonl(out, r);
}

inline void write_csv(std::ostream& out, const CyclicSweepReport& report) {
  out << cyclic_csv_header << '\n';
  for (const auto& r : report.records) write_csv_row(out, r);
}

inline void write_csv(std::ostream& out, const ProductSweepReport& report) {
  out << product_csv_header << '\n';
  for (const auto& r : report.records) write_csv_row(out, r);
}

inline void write_summary(std::ostream& out, const CyclicSweepReport& report) {
  out << "records: " << report.records.size() << "\n"
      << "regular: " << report.regular << "\n"
      << "exceptional: " << report.exceptional << "\n"
      << "disagreements: " << report.disagreements.size() << "\n";
  for (auto n : report.disagreements) out << "  disagreement at n=" << n << "\n";
}

inline void write_summary(std::ostream& out, const ProductSweepReport& report) {
  out << "records: " << report.records.size() << "\n";
  for (auto c : all_product_classes) out << to_string(c) << ": " << report.tally(c) << "\n";
  out << "unverified: " << report.unverified << "\n"
      << "oracle_disagreements: " << report.oracle_disagreements.size() << "\n";
  for (const auto& g : report.oracle_disagreements) {
    out << "  oracle disagreement at " << g.descriptor() << "\n";
  }
}

}  // namespace homcount
