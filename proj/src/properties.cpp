#include "resolv/properties.hpp"

#include <algorithm>
#include <sstream>

#include "resolv/naive.hpp"
#include "resolv/resolvability.hpp"
#include "resolv/sampler.hpp"

namespace resolv {

namespace {

bool contains_all(const std::vector<int>& sorted_set, const std::vector<int>& required) {
    return std::includes(sorted_set.begin(), sorted_set.end(), required.begin(), required.end());
}

bool is_path_graph(const Graph& g) {
    if (g.edge_count() != g.order() - 1) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool same_result(const naive::Result& ref, const Certificate& cert) {
    if (ref.has_value() != (cert.status == CertStatus::value)) return false;
    if (!ref) return true;
    return ref->first == *cert.value && ref->second == cert.witness;
}

}  // namespace

PropertyReport run_property_suites(const PropertyOptions& options) {
    PropertyReport rep;
    rep.options = options;
    GraphSampler sampler(options.seed);

    // (a) deletion-based vs count-based fault-tolerance check
    for (int i = 0; i < options.ft_samples; ++i) {
        Graph g = sampler.connected_graph(2, options.ft_max_vertices);
        DistanceMatrix d = apsp(g);
        std::vector<int> r = sampler.subset(g.order(), std::min(2, g.order()));
        ++rep.ft_samples_run;
        if (ft_check_by_deletion(g, d, r) != ft_check_by_count(g, d, r)) ++rep.ft_disagreements;
    }

    // (b)-(d) solver agreement with brute force, twin observations, chain
    for (int i = 0; i < options.solver_graphs; ++i) {
        Graph g = sampler.connected_graph(2, options.solver_max_vertices);
        DistanceMatrix d = apsp(g);
        ++rep.graphs_run;

        Certificate dim_cert = metric_dimension_exact(g);
        Certificate fdim_cert = ftmd_exact(g);
        Certificate ir_cert = ir_exact(g);
        SolveOptions no_shortcut;
        no_shortcut.twin_shortcut = false;
        Certificate ifr_fast = ifr_exact(g);
        Certificate ifr_full = ifr_exact(g, no_shortcut);
        Certificate beta_cert = independence_number_exact(g);

        auto ref_dim = naive::dim(g);
        auto ref_fdim = naive::fdim(g);
        auto ref_ir = naive::ir(g);
        auto ref_ifr = naive::ifr(g);

        if (!same_result(ref_dim, dim_cert)) ++rep.dim_mismatches;
        if (!same_result(ref_fdim, fdim_cert)) ++rep.fdim_mismatches;
        if (!same_result(ref_ir, ir_cert)) ++rep.ir_mismatches;

        // shortcut path must agree with the exhaustive path and brute force
        bool obs2_ok = ifr_fast.status == ifr_full.status &&
                       ifr_fast.value == ifr_full.value && same_result(ref_ifr, ifr_full);
        if (ifr_fast.status == CertStatus::value && ifr_fast.witness != ifr_full.witness)
            obs2_ok = false;
        if (!obs2_ok) ++rep.obs2_mismatches;

        // every minimum FTRS contains every twin class of size >= 2
        std::vector<int> forced = twin_classes(g).forced_vertices();
        if (!contains_all(fdim_cert.witness, forced)) ++rep.obs1_violations;
        if (ref_fdim && !contains_all(ref_fdim->second, forced)) ++rep.obs1_violations;

        // supersets of certified witnesses stay feasible
        if (g.order() > static_cast<int>(dim_cert.witness.size())) {
            std::vector<int> grown = dim_cert.witness;
            for (int v = 0; v < g.order(); ++v)
                if (!std::binary_search(grown.begin(), grown.end(), v)) {
                    grown.insert(std::lower_bound(grown.begin(), grown.end(), v), v);
                    break;
                }
            if (!is_resolving(g, d, grown)) ++rep.monotonicity_violations;
        }
        if (g.order() > static_cast<int>(fdim_cert.witness.size())) {
            std::vector<int> grown = fdim_cert.witness;
            for (int v = 0; v < g.order(); ++v)
                if (!std::binary_search(grown.begin(), grown.end(), v)) {
                    grown.insert(std::lower_bound(grown.begin(), grown.end(), v), v);
                    break;
                }
            if (!ft_check_by_deletion(g, d, grown)) ++rep.monotonicity_violations;
        }

        if (ifr_full.status == CertStatus::value) {
            ++rep.chain_graphs;
            const int dim = *dim_cert.value;
            const int fdim = *fdim_cert.value;
            const int ifr = *ifr_full.value;
            const int beta = *beta_cert.value;
            if (!(1 + dim <= fdim && fdim <= ifr && ifr <= 1 + beta && 1 + beta <= g.order()))
                ++rep.chain_violations;
            if (ir_cert.status != CertStatus::value) ++rep.prop5_violations;
            if (ifr == 2 && !is_path_graph(g)) {
                std::ostringstream note;
                note << "ifr=2 on non-path graph, n=" << g.order() << " edges={";
                for (auto [u, v] : g.edges()) note << ' ' << u << '-' << v;
                note << " }";
                rep.converse_counterexamples.push_back(note.str());
            }
        }
    }
    return rep;
}

std::string PropertyReport::render() const {
    std::ostringstream out;
    out << "property suites (seed=" << options.seed << ")\n";
    out << "  ft-equivalence: " << ft_samples_run << " samples, " << ft_disagreements
        << " disagreements\n";
    out << "  solver-vs-brute-force: " << graphs_run << " graphs, dim=" << dim_mismatches
        << " fdim=" << fdim_mismatches << " ir=" << ir_mismatches << " mismatches\n";
    out << "  twin observations: forced-containment violations=" << obs1_violations
        << ", shortcut mismatches=" << obs2_mismatches << "\n";
    out << "  monotonicity violations: " << monotonicity_violations << "\n";
    out << "  chain: " << chain_graphs << " graphs with ifr defined, " << chain_violations
        << " violations, ifr-without-ir=" << prop5_violations << "\n";
    out << "  path-characterization counterexamples: " << converse_counterexamples.size() << "\n";
    for (const auto& note : converse_counterexamples) out << "    " << note << "\n";
    out << (all_ok() ? "  all suites clean\n" : "  FAILURES PRESENT\n");
    return out.str();
}

}  // namespace resolv
