#ifndef RESOLV_CERTIFICATE_HPP
#define RESOLV_CERTIFICATE_HPP

#include <optional>
#include <string>

#include "resolv/families.hpp"
#include "resolv/resolvability.hpp"

namespace resolv {

// Rendering context for certificates: the family spec (when the graph came
// from a generator) supplies paper-style vertex names; the hash identifies
// the canonical edge list of the input. Timing fields are informational and
// can be suppressed for byte-reproducible output.
struct CertificateContext {
    std::optional<FamilySpec> spec;
    std::uint64_t graph_hash = 0;
    bool include_time = true;
};

// "j^1_1+j^2_1+..." for family graphs, "v^1+v^2+..." otherwise; "-" if empty
std::string witness_notation(const std::optional<FamilySpec>& spec, const std::vector<int>& ids);

// stable key/value document, one field per line
std::string certificate_text(const Certificate& cert, const CertificateContext& ctx);

// single CSV row: invariant,status,value,witness,graph_hash[,time_ms]
std::string certificate_csv_row(const Certificate& cert, const CertificateContext& ctx);
std::string certificate_csv_header(bool include_time);

}  // namespace resolv

#endif
