#include "kitaev/thermo.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include <Eigen/Dense>

namespace kitaev {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// ln cosh x without overflow.
double log_cosh(double x) {
    double a = std::abs(x);
    return a - kLn2 + std::log1p(std::exp(-2.0 * a));
}

void validate(const ThermalPoint& tp) {
    if (tp.beta < 0.0) throw std::invalid_argument("beta must be >= 0");
    int min_n = tp.kind == LatticeKind::SquareTorus ? 3 : 2;
    if (tp.n < min_n)
        throw std::invalid_argument("size " + std::to_string(tp.n) + " below the minimum " +
                                    std::to_string(min_n) + " for " + to_string(tp.kind));
}

void require_two_leg(const ThermalPoint& tp, const char* what) {
    if (tp.kind != LatticeKind::TwoLegLadder)
        throw std::invalid_argument(std::string(what) + " is a two-leg ladder quantity");
}

struct ClosedFormShape {
    double free_spins;      // ln Z = free_spins*ln2 + ...
    double vertex_power;    // exponent m in cosh^m bJ (1 + tanh^m bJ)
    double plaquette_power; // exponent in cosh^p bK
};

ClosedFormShape shape_of(const ThermalPoint& tp) {
    double n = tp.n;
    switch (tp.kind) {
        case LatticeKind::TwoLegLadder: return {3 * n, 2 * n, n};
        case LatticeKind::ThreeLegLadder: return {5 * n, 3 * n, 2 * n};
        case LatticeKind::SquareTorus: return {2 * n * n, n * n, n * n};
    }
    return {};
}

} // namespace

double log_partition_closed(const ThermalPoint& tp) {
    validate(tp);
    ClosedFormShape sh = shape_of(tp);
    double t = std::tanh(tp.beta * tp.c.j);
    return sh.free_spins * kLn2 + sh.vertex_power * log_cosh(tp.beta * tp.c.j) +
           std::log1p(std::pow(t, sh.vertex_power)) +
           sh.plaquette_power * log_cosh(tp.beta * tp.c.k);
}

double partition_closed(const ThermalPoint& tp) {
    double ln_z = log_partition_closed(tp);
    if (std::abs(ln_z) > 700.0)
        throw std::overflow_error("partition function overflows the linear domain; "
                                  "use log_partition_closed");
    return std::exp(ln_z);
}

double log_partition_transfer(const ThermalPoint& tp) {
    validate(tp);
    require_two_leg(tp, "the transfer-matrix partition function");

    // Tr T^N with T = [[2cosh 2bJ, 2], [2, 2cosh 2bJ]], by squaring with
    // rescaling so that N up to thousands stays finite.
    Eigen::Matrix2d t;
    double d = 2.0 * std::cosh(2.0 * tp.beta * tp.c.j);
    t << d, 2.0, 2.0, d;

    Eigen::Matrix2d acc = Eigen::Matrix2d::Identity();
    double log_acc = 0.0, log_base = 0.0;
    int e = tp.n;
    while (e > 0) {
        if (e & 1) {
            acc = acc * t;
            log_acc += log_base;
            double m = acc.cwiseAbs().maxCoeff();
            acc /= m;
            log_acc += std::log(m);
        }
        e >>= 1;
        if (e > 0) {
            t = t * t;
            log_base *= 2.0;
            double m = t.cwiseAbs().maxCoeff();
            t /= m;
            log_base += std::log(m);
        }
    }
    double log_z0 = std::log(acc.trace()) + log_acc;
    double log_z1 = tp.n * (kLn2 + log_cosh(tp.beta * tp.c.k));
    return log_z0 + log_z1;
}

double partition_transfer(const ThermalPoint& tp) {
    double ln_z = log_partition_transfer(tp);
    if (std::abs(ln_z) > 700.0)
        throw std::overflow_error("partition function overflows the linear domain; "
                                  "use log_partition_transfer");
    return std::exp(ln_z);
}

double avg_energy_density_limit(double beta, double j, double k) {
    return -(2.0 * j * std::tanh(beta * j) + k * std::tanh(beta * k));
}

double avg_energy_finite(const ThermalPoint& tp) {
    validate(tp);
    ClosedFormShape sh = shape_of(tp);
    double t = std::tanh(tp.beta * tp.c.j);
    double sech2 = 1.0 - t * t;
    double dv = sh.vertex_power * tp.c.j * t +
                sh.vertex_power * tp.c.j * sech2 * std::pow(t, sh.vertex_power - 1.0) /
                    (1.0 + std::pow(t, sh.vertex_power));
    double dp = sh.plaquette_power * tp.c.k * std::tanh(tp.beta * tp.c.k);
    return -(dv + dp);
}

double entropy_density_limit(double beta, double j, double k) {
    double x = beta * j, y = beta * k;
    return 3.0 * kLn2 + 2.0 * log_cosh(x) + log_cosh(y) - 2.0 * x * std::tanh(x) -
           y * std::tanh(y);
}

double entropy_vertex_term(double x) {
    return 2.0 * kLn2 + 2.0 * log_cosh(x) - 2.0 * x * std::tanh(x);
}

double entropy_plaquette_term(double x) {
    return kLn2 + log_cosh(x) - x * std::tanh(x);
}

double wilson_x_average(const ThermalPoint& tp) {
    validate(tp);
    require_two_leg(tp, "<W_x>");
    double t = std::tanh(tp.beta * tp.c.j);
    return 2.0 * std::pow(t, tp.n) / (1.0 + std::pow(t, 2.0 * tp.n));
}

double wilson_z_average(const ThermalPoint& tp) {
    validate(tp);
    require_two_leg(tp, "<W_z>");
    return 0.0;
}

void write_sweep_csv(std::ostream& os, const std::vector<ThermalPoint>& grid) {
    os << "beta,J,K,N,lnZ,avg_energy,entropy_density,wilson_x\n";
    char buf[40];
    auto put = [&](double v, char sep) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << buf << sep;
    };
    for (const ThermalPoint& tp : grid) {
        require_two_leg(tp, "the thermal sweep");
        put(tp.beta, ',');
        put(tp.c.j, ',');
        put(tp.c.k, ',');
        os << tp.n << ',';
        put(log_partition_closed(tp), ',');
        put(avg_energy_density_limit(tp.beta, tp.c.j, tp.c.k), ',');
        put(entropy_density_limit(tp.beta, tp.c.j, tp.c.k), ',');
        put(wilson_x_average(tp), '\n');
    }
}

} // namespace kitaev
