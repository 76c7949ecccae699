#ifndef EDSCREEN_GAMMA_HPP
#define EDSCREEN_GAMMA_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace edscreen {

enum class GammaKind { Gamma1, Gamma2, Gamma3, Custom };

// Dissimilarity transform applied to squared differences. The three built-in
// kinds are t -> 1-exp(-t), t -> log(1+t) and t -> sqrt(t); all satisfy
// gamma(0) = 0 and are monotone non-decreasing on [0, inf).
class GammaKernel {
  public:
    GammaKernel() : kind_(GammaKind::Gamma1) {}
    explicit GammaKernel(GammaKind kind) : kind_(kind) {
        if (kind == GammaKind::Custom)
            throw std::invalid_argument("custom kernel requires a callable");
    }
    GammaKernel(std::function<double(double)> fn, std::string name)
        : kind_(GammaKind::Custom), fn_(std::move(fn)), name_(std::move(name)) {
        if (!fn_) throw std::invalid_argument("custom kernel callable is empty");
    }

    static GammaKernel g1() { return GammaKernel(GammaKind::Gamma1); }
    static GammaKernel g2() { return GammaKernel(GammaKind::Gamma2); }
    static GammaKernel g3() { return GammaKernel(GammaKind::Gamma3); }

    // Parse "g1"/"g2"/"g3" (also accepts "gamma1" etc.).
    static GammaKernel parse(const std::string& s) {
        if (s == "g1" || s == "gamma1") return g1();
        if (s == "g2" || s == "gamma2") return g2();
        if (s == "g3" || s == "gamma3") return g3();
        throw std::invalid_argument("unknown gamma kernel: " + s);
    }

    GammaKind kind() const { return kind_; }

    const std::string& name() const {
        static const std::string names[3] = {"g1", "g2", "g3"};
        if (kind_ == GammaKind::Custom) return name_;
        return names[static_cast<int>(kind_)];
    }

    double operator()(double t) const {
        switch (kind_) {
            case GammaKind::Gamma1: return -std::expm1(-t);
            case GammaKind::Gamma2: return std::log1p(t);
            case GammaKind::Gamma3: return std::sqrt(t);
            case GammaKind::Custom: return fn_(t);
        }
        return 0.0;  // unreachable
    }

  private:
    GammaKind kind_;
    std::function<double(double)> fn_;
    std::string name_;
};

// Checked evaluation; rejects negative arguments.
inline double gamma_eval(const GammaKernel& kernel, double t) {
    if (!(t >= 0.0))
        throw std::domain_error("gamma kernel argument must be non-negative");
    return kernel(t);
}

}  // namespace edscreen

#endif
