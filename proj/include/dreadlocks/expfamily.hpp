#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "dreadlocks/landing.hpp"

namespace dreadlocks {

// E_lambda(z) = lambda * exp(z)
struct ExpMap {
    std::complex<double> lambda{0.0, 1.0};
};

struct TraceConfig {
    int depth = 60;
    double start_potential = 40.0;
    double tol = 1e-9;
    double tract_threshold = -50.0;
    double match_tol = 1e-6;
};

enum class VerdictKind { Point, Tract, Undecided };

struct LandingEstimate {
    VerdictKind kind = VerdictKind::Undecided;
    std::complex<double> point{};
    std::string note;
};

struct RayApprox {
    std::vector<std::complex<double>> points;  // the pullback sequence zeta_1, zeta_2, ...
    LandingEstimate verdict;
};

std::complex<double> exp_apply(const ExpMap& f, std::complex<double> z);

// The inverse branch taking values in the fundamental strip of symbol index
// F: log|w/lambda| + i Arg(w/lambda) + 2 pi i F, principal Arg in (-pi, pi].
std::complex<double> inverse_branch(const ExpMap& f, std::complex<double> w, int64_t branch);

RayApprox trace_ray(const ExpMap& f, const ExtAddress& a, const TraceConfig& cfg = {});
LandingEstimate estimate_landing(const ExpMap& f, const ExtAddress& a,
                                 const TraceConfig& cfg = {});

enum class Stability { Repelling, Attracting, Indifferent };

struct StabilityReport {
    Stability kind = Stability::Repelling;
    double multiplier_modulus = 0.0;
};

// z must satisfy |E(z) - z| < tol.
StabilityReport classify_fixed_point(const ExpMap& f, std::complex<double> z, double tol = 1e-6);

// Multiplier modulus of the cycle through z of the given period.
StabilityReport classify_cycle(const ExpMap& f, std::complex<double> z, int period,
                               double tol = 1e-6);

struct PsfOrbit {
    bool detected = false;
    std::vector<std::complex<double>> orbit;  // [v_0 .. v_{m+n-1}], v_0 = 0
    int preperiod = 0;
    int period = 1;
    std::string note;
};

// Iterates the singular value 0 and detects a cycle within tol.
PsfOrbit psf_check(const ExpMap& f, int max_iter = 100, double tol = 1e-9);

// Scans small addresses for the ray landing at the singular value 0 and
// assembles the exponential portrait (one ZFamily over the scanned address).
struct DerivedPortrait {
    Portrait portrait;
    ExtAddress ray_at_zero;
    PsfOrbit orbit;
};
DerivedPortrait derive_exp_portrait(const ExpMap& f, const TraceConfig& cfg = {},
                                    int64_t scan_lo = -3, int64_t scan_hi = 3);

struct VerifyReport {
    size_t addresses = 0;
    size_t decided = 0;
    size_t undecided = 0;
    size_t pairs_compared = 0;
    size_t mismatches = 0;
    std::vector<std::string> mismatch_details;
    std::vector<std::string> undecided_details;
    double undecided_rate() const {
        return addresses ? static_cast<double>(undecided) / static_cast<double>(addresses) : 0.0;
    }
};

// Cross-validates combinatorial landing equivalence against numerical
// landing coincidence over the sample; mismatches are itemized.
VerifyReport verify_landing_predictions(const ExpMap& f, const Portrait& p,
                                        const std::vector<ExtAddress>& sample,
                                        const TraceConfig& cfg = {});

void write_trace_csv(std::ostream& out, const std::string& address_text, const RayApprox& ray);
std::string render_trace_svg(const std::vector<std::pair<std::string, RayApprox>>& traces);

}  // namespace dreadlocks
