#pragma once

#include "linalg.hpp"

#include <functional>

namespace mhl {

enum class Direction { Increasing, Decreasing };

// Finite exhaustive filtration. Decreasing filtrations are stored as increasing ones
// through G_k = F^{-k}. Only jumps are stored; a query between jumps returns the
// nearest step below (increasing) or above (decreasing).
template <class T> class Filtration {
public:
    using Step = std::pair<int, Subspace<T>>;

    Filtration() = default;
    // Every step equal to the whole space from index k on (increasing) or up to k (decreasing).
    static Filtration trivial(std::size_t n, Direction d, int k);
    // Steps are given in the filtration's own indexing. Throws InvalidFiltration when
    // steps are not nested or the largest step is not the whole space.
    static Filtration from_steps(std::size_t n, Direction d, std::vector<Step> steps);
    // Steps f(k) for k in [a, b]; f(b) (increasing) or f(a) (decreasing) must be the whole space.
    static Filtration build(std::size_t n, Direction d, int a, int b, const std::function<Subspace<T>(int)>& f);

    std::size_t ambient() const { return n_; }
    Direction direction() const { return dir_; }
    bool increasing() const { return dir_ == Direction::Increasing; }

    Subspace<T> at(int k) const;
    // Graded pieces vanish outside [lo(), hi()]. Empty range (lo > hi) for the zero space.
    int lo() const;
    int hi() const;
    // (W_k, W_{k-1}) or (F^p, F^{p+1}).
    std::pair<Subspace<T>, Subspace<T>> graded_piece(int k) const;
    Quotient<T> graded(int k) const;
    std::size_t graded_dim(int k) const;
    // Jumps in the filtration's own indexing, ordered by inclusion.
    std::vector<Step> steps() const;
    std::vector<int> jumps() const;

    // Increasing: W'_k = W_{k+s}. Decreasing: F'^p = F^{p+s}.
    Filtration shifted(int s) const;
    // Filtration induced on sub/quot, in quotient coordinates.
    Filtration induced(const Quotient<T>& q) const;
    // Filtration induced on a subspace, in its echelon coordinates.
    Filtration restricted(const Subspace<T>& s) const { return induced(Quotient<T>(s, Subspace<T>::zero(n_))); }
    // f(G_k) on image(f), in the echelon coordinates of image(f).
    Filtration on_image(const Matrix<T>& f) const;
    // Every step preserved by f: f(G_k) ⊆ G'_k.
    bool preserved_by(const Matrix<T>& f, const Filtration& target) const;

    friend bool operator==(const Filtration& a, const Filtration& b)
    {
        return a.n_ == b.n_ && a.dir_ == b.dir_ && a.idx_ == b.idx_ && a.sub_ == b.sub_;
    }
    friend bool operator!=(const Filtration& a, const Filtration& b) { return !(a == b); }

private:
    static Filtration normalize(std::size_t n, Direction d, std::vector<int> idx, std::vector<Subspace<T>> sub);
    int internal(int k) const { return increasing() ? k : -k; }

    std::size_t n_ = 0;
    Direction dir_ = Direction::Increasing;
    std::vector<int> idx_; // internal increasing indices of jumps
    std::vector<Subspace<T>> sub_;
};

Filtration<Gaussian> complexify(const Filtration<Rational>& f);
Filtration<Gaussian> conj(const Filtration<Gaussian>& f);

} // namespace mhl
