#pragma once

#include "bdtori/cover.hpp"
#include "bdtori/localfield.hpp"

#include <string>
#include <vector>

namespace bdtori {

struct PropertyResult {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string witness;  // minimal failing instance, empty when passed
};

struct SelftestOptions {
    bool full_grid = true;
    SymbolOptions symbol;
};

/// Deterministic grid of split cover specs (rank <= max_rank) over the given
/// residue cardinalities, one spec per (q, n | q-1, C sample).
std::vector<CoverSpec> grid_specs(const std::vector<long>& qs, std::size_t max_rank,
                                  const SymbolOptions& symbol);

PropertyResult check_snf_roundtrip(long trials, unsigned seed);
PropertyResult check_cokernel_orders(long trials, unsigned seed);
PropertyResult check_xqn_bijective(long trials, unsigned seed);
PropertyResult check_sharp_sandwich(long trials, unsigned seed);
PropertyResult check_hilbert_laws(const std::vector<long>& qs, const SymbolOptions& symbol);
PropertyResult check_symbol_displayed_values(const SymbolOptions& symbol);
PropertyResult check_cover_cocycle(const std::vector<long>& qs, long pairs,
                                   const SymbolOptions& symbol, unsigned seed);
PropertyResult check_center_equality(const std::vector<long>& qs, const SymbolOptions& symbol);
PropertyResult check_lagrangians(const std::vector<long>& qs, const SymbolOptions& symbol);
PropertyResult check_cocycle_agreement(const std::vector<long>& qs, long bound,
                                       const SymbolOptions& symbol);
PropertyResult check_convolution(const std::vector<long>& qs, const SymbolOptions& symbol);
PropertyResult check_hecke_support(const std::vector<long>& qs, const SymbolOptions& symbol);
PropertyResult check_automorphism_paths(long trials, const SymbolOptions& symbol, unsigned seed);
PropertyResult check_irreps(const SymbolOptions& symbol);
PropertyResult check_spherical_dims(const SymbolOptions& symbol);
PropertyResult check_pouches(const SymbolOptions& symbol);
PropertyResult check_mult_bound();

std::vector<PropertyResult> run_selftest(const SelftestOptions& opts);

}  // namespace bdtori
