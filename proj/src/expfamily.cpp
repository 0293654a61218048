#include "dreadlocks/expfamily.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "dreadlocks/util.hpp"

namespace dreadlocks {

std::complex<double> exp_apply(const ExpMap& f, std::complex<double> z) {
    return f.lambda * std::exp(z);
}

std::complex<double> inverse_branch(const ExpMap& f, std::complex<double> w, int64_t branch) {
    const std::complex<double> q = w / f.lambda;
    if (q == std::complex<double>(0.0, 0.0))
        throw std::domain_error("inverse branch applied to 0");
    const double two_pi = 2.0 * M_PI;
    return {std::log(std::abs(q)), std::arg(q) + two_pi * static_cast<double>(branch)};
}

RayApprox trace_ray(const ExpMap& f, const ExtAddress& a, const TraceConfig& cfg) {
    if (f.lambda == std::complex<double>(0.0, 0.0))
        throw std::invalid_argument("lambda must be nonzero");
    for (size_t i = 0; i < a.preperiod() + a.period(); ++i)
        if (a.at(i).chain != 0)
            throw std::invalid_argument("exponential tracing needs a single-chain address");
    RayApprox ray;
    const std::complex<double> base{cfg.start_potential,
                                    2.0 * M_PI * static_cast<double>(a.first().index)};
    bool certified_tract = false;
    std::string dead_note;
    for (int n = 1; n <= cfg.depth && !certified_tract && dead_note.empty(); ++n) {
        std::complex<double> z = base;
        for (int k = n - 1; k >= 0; --k) {
            if (z == std::complex<double>(0.0, 0.0)) {
                // The pullback reached the asymptotic value exactly. With one
                // branch left the tail provably heads into the tract; with
                // more branches the limit sits below machine resolution.
                if (k == 0) {
                    z = {-1e12, 2.0 * M_PI * static_cast<double>(a.first().index)};
                    certified_tract = true;
                } else {
                    dead_note = "pullback collapsed onto the singular value below machine "
                                "resolution";
                }
                break;
            }
            z = inverse_branch(f, z, a.at(static_cast<size_t>(k)).index);
        }
        if (dead_note.empty()) ray.points.push_back(z);
    }
    if (certified_tract) {
        ray.verdict = {VerdictKind::Tract,
                       {},
                       "pullback reached the asymptotic value; tail certified"};
        return ray;
    }
    const auto& pts = ray.points;
    const size_t d = pts.size();
    if (d >= 3) {
        const double d1 = std::abs(pts[d - 1] - pts[d - 2]);
        const double d2 = std::abs(pts[d - 2] - pts[d - 3]);
        if (d1 < cfg.tol && d2 < cfg.tol) {
            ray.verdict = {VerdictKind::Point, pts[d - 1], ""};
            return ray;
        }
        const double r1 = pts[d - 1].real(), r2 = pts[d - 2].real(), r3 = pts[d - 3].real();
        if (r1 < cfg.tract_threshold && r1 < r2 && r2 < r3) {
            ray.verdict = {VerdictKind::Tract, {}, "real parts diverge to -infinity"};
            return ray;
        }
    }
    ray.verdict = {VerdictKind::Undecided, {},
                   dead_note.empty() ? "no convergence within depth" : dead_note};
    return ray;
}

LandingEstimate estimate_landing(const ExpMap& f, const ExtAddress& a, const TraceConfig& cfg) {
    return trace_ray(f, a, cfg).verdict;
}

StabilityReport classify_fixed_point(const ExpMap& f, std::complex<double> z, double tol) {
    if (std::abs(exp_apply(f, z) - z) >= tol)
        throw std::invalid_argument("point is not fixed within tolerance");
    return classify_cycle(f, z, 1, tol);
}

StabilityReport classify_cycle(const ExpMap& f, std::complex<double> z, int period, double tol) {
    (void)tol;
    if (period < 1) throw std::invalid_argument("period must be >= 1");
    // E'(z) = E(z), so the cycle multiplier is the product of the orbit
    // values after one step.
    std::complex<double> mult{1.0, 0.0};
    std::complex<double> cur = z;
    for (int i = 0; i < period; ++i) {
        cur = exp_apply(f, cur);
        mult *= cur;
    }
    StabilityReport rep;
    rep.multiplier_modulus = std::abs(mult);
    const double band = 1e-9;
    if (rep.multiplier_modulus > 1.0 + band)
        rep.kind = Stability::Repelling;
    else if (rep.multiplier_modulus < 1.0 - band)
        rep.kind = Stability::Attracting;
    else
        rep.kind = Stability::Indifferent;
    return rep;
}

PsfOrbit psf_check(const ExpMap& f, int max_iter, double tol) {
    PsfOrbit out;
    std::vector<std::complex<double>> v{std::complex<double>(0.0, 0.0)};
    for (int k = 0; k < max_iter; ++k) {
        const std::complex<double> last = v.back();
        if (last.real() > 500.0) {
            out.note = "orbit escapes (overflow guard)";
            return out;
        }
        v.push_back(exp_apply(f, last));
        // minimal preperiod first, then minimal period
        for (size_t m = 0; m + 1 < v.size(); ++m) {
            if (std::abs(v.back() - v[m]) < tol) {
                out.detected = true;
                out.preperiod = static_cast<int>(m);
                out.period = static_cast<int>(v.size() - 1 - m);
                out.orbit.assign(v.begin(), v.end() - 1);
                return out;
            }
        }
    }
    out.note = "no cycle within " + std::to_string(max_iter) + " iterations";
    return out;
}

DerivedPortrait derive_exp_portrait(const ExpMap& f, const TraceConfig& cfg, int64_t scan_lo,
                                    int64_t scan_hi) {
    DerivedPortrait out;
    out.orbit = psf_check(f);
    if (!out.orbit.detected)
        throw std::invalid_argument("lambda is not detectably post-singularly finite: " +
                                    out.orbit.note);
    // Scan small preperiodic addresses for the ray landing at 0.
    EnumWindow w;
    w.symbol_lo = scan_lo;
    w.symbol_hi = scan_hi;
    w.max_preperiod = static_cast<size_t>(out.orbit.preperiod) + 1;
    w.max_period = static_cast<size_t>(out.orbit.period);
    std::optional<ExtAddress> hit;
    for (const ExtAddress& a : enumerate_addresses({1}, w)) {
        const LandingEstimate est = estimate_landing(f, a, cfg);
        if (est.kind == VerdictKind::Point && std::abs(est.point) < cfg.match_tol) {
            hit = a;
            break;  // enumeration is sorted; take the minimal address
        }
    }
    if (!hit)
        throw std::invalid_argument(
            "no scanned address lands at the singular value 0; widen the scan window");
    out.ray_at_zero = *hit;
    Portrait p;
    p.alphabet = {1};
    SingularEntry s;
    s.address = *hit;
    s.locus = Locus::Julia;
    s.orbit_preperiod = out.orbit.preperiod;
    s.orbit_period = out.orbit.period;
    p.singulars.push_back(std::move(s));
    CritGroup g;
    g.point_id = "T0";
    g.target = 1;
    g.locus = Locus::Julia;
    g.shape = CritGroup::ZFamily{0};
    p.groups.push_back(std::move(g));
    out.portrait = std::move(p);
    return out;
}

VerifyReport verify_landing_predictions(const ExpMap& f, const Portrait& p,
                                        const std::vector<ExtAddress>& sample,
                                        const TraceConfig& cfg) {
    VerifyReport rep;
    rep.addresses = sample.size();
    std::vector<LandingEstimate> est(sample.size());
    parallel_for(sample.size(), [&](size_t i) { est[i] = estimate_landing(f, sample[i], cfg); });
    for (size_t i = 0; i < sample.size(); ++i) {
        if (est[i].kind == VerdictKind::Undecided) {
            ++rep.undecided;
            rep.undecided_details.push_back(format_address(sample[i], p.alphabet) + ": " +
                                            est[i].note);
        } else {
            ++rep.decided;
        }
    }
    LandingDecider decider(p);
    for (size_t i = 0; i < sample.size(); ++i) {
        if (est[i].kind == VerdictKind::Undecided) continue;
        for (size_t j = i + 1; j < sample.size(); ++j) {
            if (est[j].kind == VerdictKind::Undecided) continue;
            ++rep.pairs_compared;
            bool numerical_same = false;
            if (est[i].kind == VerdictKind::Tract && est[j].kind == VerdictKind::Tract)
                numerical_same = true;
            else if (est[i].kind == VerdictKind::Point && est[j].kind == VerdictKind::Point)
                numerical_same = std::abs(est[i].point - est[j].point) < cfg.match_tol;
            const bool combinatorial = decider.equivalent(sample[i], sample[j]);
            if (numerical_same != combinatorial) {
                ++rep.mismatches;
                std::ostringstream msg;
                msg << format_address(sample[i], p.alphabet) << " vs "
                    << format_address(sample[j], p.alphabet) << ": combinatorial "
                    << (combinatorial ? "together" : "apart") << ", numerical "
                    << (numerical_same ? "together" : "apart");
                rep.mismatch_details.push_back(msg.str());
            }
        }
    }
    return rep;
}

void write_trace_csv(std::ostream& out, const std::string& address_text, const RayApprox& ray) {
    for (size_t k = 0; k < ray.points.size(); ++k)
        out << address_text << "," << k + 1 << "," << format_float(ray.points[k].real()) << ","
            << format_float(ray.points[k].imag()) << "\n";
}

std::string render_trace_svg(const std::vector<std::pair<std::string, RayApprox>>& traces) {
    double min_x = -1, max_x = 1, min_y = -1, max_y = 1;
    for (const auto& [name, ray] : traces) {
        for (const auto& z : ray.points) {
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
            min_x = std::min(min_x, z.real());
            max_x = std::max(max_x, z.real());
            min_y = std::min(min_y, z.imag());
            max_y = std::max(max_y, z.imag());
        }
    }
    const double w = 800, h = 600, pad = 30;
    auto sx = [&](double x) { return pad + (x - min_x) / (max_x - min_x) * (w - 2 * pad); };
    auto sy = [&](double y) { return h - pad - (y - min_y) / (max_y - min_y) * (h - 2 * pad); };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    size_t ci = 0;
    for (const auto& [name, ray] : traces) {
        const char* color = colors[ci++ % 6];
        svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\" points=\"";
        for (const auto& z : ray.points)
            if (std::isfinite(z.real()) && std::isfinite(z.imag()))
                svg << sx(z.real()) << "," << sy(z.imag()) << " ";
        svg << "\"/>\n";
        if (ray.verdict.kind == VerdictKind::Point)
            svg << "<circle cx=\"" << sx(ray.verdict.point.real()) << "\" cy=\""
                << sy(ray.verdict.point.imag()) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        if (!ray.points.empty())
            svg << "<text x=\"" << sx(ray.points.front().real()) << "\" y=\""
                << sy(ray.points.front().imag()) << "\" font-size=\"10\">" << name << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace dreadlocks
