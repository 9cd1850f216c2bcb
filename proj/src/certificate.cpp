#include "resolv/certificate.hpp"

#include <sstream>

namespace resolv {

namespace {

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::string id_list(const std::vector<int>& ids) {
    if (ids.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(ids[i]);
    }
    return s;
}

std::string format_ms(double ms) {
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(3);
    o << ms;
    return o.str();
}

}  // namespace

std::string witness_notation(const std::optional<FamilySpec>& spec, const std::vector<int>& ids) {
    if (ids.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += '+';
        s += spec ? vertex_name(*spec, ids[i]) : "v^" + std::to_string(ids[i] + 1);
    }
    return s;
}

std::string certificate_text(const Certificate& cert, const CertificateContext& ctx) {
    std::ostringstream out;
    out << "invariant: " << invariant_name(cert.invariant) << '\n';
    out << "status: " << status_name(cert.status) << '\n';
    out << "value: " << (cert.value ? std::to_string(*cert.value) : "-") << '\n';
    out << "witness_ids: " << id_list(cert.witness) << '\n';
    out << "witness_paper: " << witness_notation(ctx.spec, cert.witness) << '\n';
    out << "exhausted_through: " << cert.exhaustion.exhausted_through << '\n';
    out << "candidates_checked: " << cert.exhaustion.candidates_checked << '\n';
    out << "cap: " << (cert.exhaustion.cap >= 0 ? std::to_string(cert.exhaustion.cap) : "-") << '\n';
    out << "evidence_twin_class: " << id_list(cert.exhaustion.evidence) << '\n';
    out << "graph_hash: " << hex64(ctx.graph_hash) << '\n';
    if (ctx.include_time) out << "time_ms: " << format_ms(cert.wall_ms) << '\n';
    return out.str();
}

std::string certificate_csv_header(bool include_time) {
    std::string h = "invariant,status,value,witness,graph_hash";
    if (include_time) h += ",time_ms";
    return h + "\n";
}

std::string certificate_csv_row(const Certificate& cert, const CertificateContext& ctx) {
    std::ostringstream out;
    out << invariant_name(cert.invariant) << ',' << status_name(cert.status) << ','
        << (cert.value ? std::to_string(*cert.value) : "-") << ','
        << witness_notation(ctx.spec, cert.witness) << ',' << hex64(ctx.graph_hash);
    if (ctx.include_time) out << ',' << format_ms(cert.wall_ms);
    out << '\n';
    return out.str();
}

}  // namespace resolv
