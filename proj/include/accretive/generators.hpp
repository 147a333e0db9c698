#pragma once

#include <string>

#include "accretive/rng.hpp"
#include "accretive/transform.hpp"
#include "accretive/types.hpp"
#include "accretive/window_solver.hpp"

namespace accretive {

/// Families of random test instances. All draws are deterministic functions
/// of the supplied generator state.
enum class GeneratorKind { Disk, Bidisk, SingularBand, JordanLike, Unrestricted };

struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Unrestricted;
    int n = 2;
    Window window{};       // Disk/Bidisk/SingularBand
    double fill = 0.9;     // fraction of the feasible radius actually used
    Variant partner = Variant::IAstar;  // Bidisk: which second disk
};

Matrix random_matrix(SplitMix64& rng, int n);
HermitianMatrix random_hermitian(SplitMix64& rng, int n);
HermitianMatrix random_psd(SplitMix64& rng, int n, double lo = 0.0, double hi = 2.0);
Matrix random_unitary(SplitMix64& rng, int n);
std::vector<cdouble> random_unit_vector(SplitMix64& rng, int n);
/// n x k matrix with orthonormal columns, 1 <= k <= n.
Matrix random_isometry(SplitMix64& rng, int n, int k);

/// A = mu*I + (fill*r/||B||) B: then ||A - mu*I|| <= fill*r, so C(A) is
/// accretive with margin whenever fill < 1.
Matrix gen_disk(SplitMix64& rng, int n, const Window& w, double fill = 0.9);

/// A = z0*I + s*B with z0 = mu(1+-i)/2 and s = fill*(r - mu/sqrt(2))/||B||,
/// which lands A inside both hypothesis disks of the pair:
///   partner IAstar: centers mu and  i*mu (z0 = mu(1+i)/2),
///   partner IA:     centers mu and -i*mu (z0 = mu(1-i)/2).
/// Requires r >= mu/sqrt(2) (throws std::invalid_argument otherwise); note
/// this forces M/m >= 3 + 2 sqrt(2).
Matrix gen_bidisk(SplitMix64& rng, int n, const Window& w, double fill = 0.9,
                  Variant partner = Variant::IAstar);

/// A = U diag(sigma) V* with sigma_i uniform in [m + margin, M - margin]
/// where margin = (1-fill)/2 * (M-m): C(|A|) accretive by construction.
Matrix gen_singular_band(SplitMix64& rng, int n, const Window& w, double fill = 0.9);

/// Strictly upper-triangular random matrix; its numerical range is centered
/// at 0, so no positive window is feasible. Used for infeasibility paths.
Matrix gen_jordan_like(SplitMix64& rng, int n);

Matrix gen_unrestricted(SplitMix64& rng, int n);

Matrix generate(SplitMix64& rng, const GeneratorSpec& spec);

}  // namespace accretive
