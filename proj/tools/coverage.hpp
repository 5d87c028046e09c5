#pragma once

namespace coxcli {

/// Canonical exposure of each library operation: one subcommand per
/// operation. Tests hold this table against the CLI's help output and
/// against the library surface, so the front door never silently drops
/// an operation.
struct CoverageRow {
  const char* operation;
  const char* subcommand;
};

inline constexpr CoverageRow kCoverage[] = {
    {"validate", "validate"},
    {"parse_system", "validate"},
    {"serialize", "validate"},
    {"restrict", "classify"},
    {"irreducible_components", "components"},
    {"product_order", "components"},
    {"classify_subset", "classify"},
    {"is_spherical", "spherical"},
    {"maximal_spherical_subsets", "spherical"},
    {"essential_subset", "essential"},
    {"identity", "nf"},
    {"mul_gen", "nf"},
    {"element_from_word", "nf"},
    {"normal_form", "nf"},
    {"descent_set", "descents"},
    {"support", "descents"},
    {"equals", "distance"},
    {"inverse", "distance"},
    {"mul", "distance"},
    {"word_distance", "distance"},
    {"enumerate_ball", "ball"},
    {"enumerate_group", "ball"},
    {"in_descent_class", "density"},
    {"is_minimal_coset_rep", "index"},
    {"coset_decompose", "index"},
    {"index", "index"},
    {"theorem_generator_set", "theorem-set"},
    {"check_corollary", "check-corollary"},
    {"check_quasidense_certificate", "certificate"},
    {"density_profile", "density"},
    {"check_w_invariance", "invariance"},
    {"verify_chain_transport", "verify"},
    {"verify_descent_extension", "verify"},
    {"estimate_commuting_set", "verify"},
    {"intersection_growth", "verify"},
    {"verify_index_count", "verify"},
};

inline constexpr const char* kSubcommands[] = {
    "validate",  "components", "classify",       "spherical",
    "essential", "ball",       "distance",       "nf",
    "descents",  "index",      "theorem-set",    "check-corollary",
    "certificate", "density",  "invariance",     "verify",
};

}  // namespace coxcli
