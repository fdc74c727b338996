#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rp2braid/word.hpp"

namespace rp2braid {

enum class PresentationFamily {
    VanBuskirk_Bn,
    Pure_Pn,
    PuncturedPure_Pi,
    PuncturedFull_beta,
    Mixed_Bnm,
    QuotientGamma2,
    KernelFree,
};

std::string to_string(PresentationFamily f);
PresentationFamily parse_family(const std::string& tag);
bool family_uses_m(PresentationFamily f);

struct Presentation {
    PresentationFamily family;
    int n = 0;
    std::optional<int> m;
    std::vector<Generator> generators;  // sorted: B, rho, sigma, tau, q
    std::vector<Word> relators;         // lhs * rhs^-1, freely reduced
};

// Throws std::invalid_argument when (n, m) is outside the family's range.
Presentation build(PresentationFamily family, int n, std::optional<int> m = std::nullopt);

// B_{i,j} in the punctured setting: atomic when i <= n < j, a sigma-word when n < i < j.
Word expand_B(int i, int j, int n);

// Throws if a relator letter is not a declared generator.
void validate(const Presentation& p);

// Closed-form relator count for PuncturedFull_beta.
long long beta_relator_count(int n, int m);

}  // namespace rp2braid
