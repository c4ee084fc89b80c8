#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dualhopf/report.hpp"

namespace dualhopf::suites {

/// ⧢_{>=1} against the word-interleaving oracle on basis pairs of total weight <= max_weight.
Report oracle_equivalence(int max_weight);

/// Basis counts 2^(m-1) for 1 <= m <= max_count_grade, and φ as a bijection of
/// graded bases for m <= max_phi_grade.
Report structural_counts(int max_count_grade, int max_phi_grade);

/// Commutator identities of J_{>=1} with δ_i and p_i on words of depth <= 5.
Report operator_identities(int max_weight);

/// (id ⊗̄ δ_i + δ_i ⊗ id)Δ = Δδ_i, and the same for p_i, for 1 <= i <= max_index.
Report shifted_coderivation(int max_weight, int max_index);

/// Noncommutativity of ⧢_{<=0} and cocommutativity of Δ_{<=0}, set against GE1.
Report sector_witnesses(int max_grade);

Report structure(int max_grade);
Report operators(int max_grade);
Report products(int max_grade);
Report coalgebra(int max_grade);
Report hopf(int max_grade);
Report duality(int max_grade);
Report coefficients(int max_grade);

/// structure, operators, products, coalgebra, hopf, duality, coefficients, all.
const std::vector<std::string>& suite_names();

/// Runs a named suite; throws Error for unknown names.
Report run(std::string_view name, int max_grade);

}  // namespace dualhopf::suites
