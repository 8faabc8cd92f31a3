#include "speclim/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace speclim {

namespace {

Eigen::MatrixXd to_real(const DenseMatrix& m) {
    Eigen::MatrixXd out(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out(i, j) = m.at(i, j).real();
    return out;
}

Eigen::MatrixXcd to_complex(const DenseMatrix& m) {
    Eigen::MatrixXcd out(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out(i, j) = m.at(i, j);
    return out;
}

void check_finite(const DenseMatrix& m) {
    for (const auto& z : m.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("eigenvalues: non-finite entry");
}

void check_symmetry(const DenseMatrix& m) {
    for (int i = 0; i < m.n; ++i)
        for (int j = i; j < m.n; ++j) {
            const auto& x = m.at(i, j);
            const auto& y = m.at(j, i);
            bool ok = true;
            switch (m.symmetry) {
                case MatrixSymmetry::symmetric:
                    ok = (x == y) && x.imag() == 0.0 && y.imag() == 0.0;
                    break;
                case MatrixSymmetry::hermitian:
                    ok = (x == std::conj(y));
                    break;
                case MatrixSymmetry::skew_symmetric:
                    ok = (x == -y) && x.imag() == 0.0 && y.imag() == 0.0;
                    break;
                case MatrixSymmetry::general:
                    ok = true;
                    break;
            }
            if (!ok) throw std::invalid_argument("eigenvalues: declared symmetry does not hold");
        }
}

}  // namespace

std::vector<double> Spectrum::moduli() const {
    std::vector<double> out(eigenvalues.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::abs(eigenvalues[i]);
    std::sort(out.begin(), out.end());
    return out;
}

Spectrum eigenvalues(const DenseMatrix& m) {
    if (m.symmetry == MatrixSymmetry::general)
        throw std::invalid_argument("eigenvalues: general matrices are unsupported");
    check_finite(m);
    check_symmetry(m);
    Spectrum sp;
    if (m.n == 0) return sp;
    Eigen::VectorXd ev;
    if (m.symmetry == MatrixSymmetry::symmetric && m.all_real) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_real(m),
                                                              Eigen::EigenvaluesOnly);
        ev = solver.eigenvalues();
    } else if (m.symmetry == MatrixSymmetry::skew_symmetric) {
        // i*M is Hermitian; its real eigenvalues are the signed imaginary
        // parts of Sp(M).
        Eigen::MatrixXcd h = std::complex<double>(0.0, 1.0) * to_complex(m);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
        ev = solver.eigenvalues();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_complex(m),
                                                               Eigen::EigenvaluesOnly);
        ev = solver.eigenvalues();
    }
    sp.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    std::sort(sp.eigenvalues.begin(), sp.eigenvalues.end());
    sp.radius = 0.0;
    for (double x : sp.eigenvalues) sp.radius = std::max(sp.radius, std::abs(x));
    return sp;
}

double spectral_radius(const Graph& g, Model model, double alpha) {
    switch (model) {
        case Model::A: return eigenvalues(adjacency(g)).radius;
        case Model::L: return eigenvalues(laplacian(g)).radius;
        case Model::Q: return eigenvalues(signless_laplacian(g)).radius;
        case Model::Aalpha: return eigenvalues(a_alpha(g, alpha)).radius;
    }
    throw std::invalid_argument("spectral_radius: unknown model");
}

double spectral_radius(const SignedGraph& sg) { return eigenvalues(signed_adjacency(sg)).radius; }

double spectral_radius(const MixedGraph& mg) { return eigenvalues(hermitian_adjacency(mg)).radius; }

double spectral_radius(const OrientedGraph& og) { return eigenvalues(skew_adjacency(og)).radius; }

double charpoly_eval(const DenseMatrix& m, double lambda) {
    if (m.symmetry != MatrixSymmetry::symmetric || !m.all_real)
        throw std::invalid_argument("charpoly_eval: real symmetric input required");
    check_finite(m);
    if (m.n == 0) return 1.0;
    Eigen::MatrixXd a = -to_real(m);
    for (int i = 0; i < m.n; ++i) a(i, i) += lambda;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    return lu.determinant();
}

}  // namespace speclim
