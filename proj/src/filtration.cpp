#include "mhl/filtration.hpp"

#include <algorithm>
#include <numeric>

namespace mhl {

template <class T>
Filtration<T> Filtration<T>::normalize(std::size_t n, Direction d, std::vector<int> idx, std::vector<Subspace<T>> sub)
{
    std::vector<std::size_t> order(idx.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return idx[a] < idx[b]; });
    Filtration f;
    f.n_ = n;
    f.dir_ = d;
    Subspace<T> prev = Subspace<T>::zero(n);
    for (std::size_t o = 0; o < order.size(); ++o) {
        const Subspace<T>& s = sub[order[o]];
        require(s.ambient() == n, ErrorCode::DimensionMismatch, "filtration step has wrong ambient dimension");
        if (o > 0 && idx[order[o]] == idx[order[o - 1]] && s != prev)
            throw Error(ErrorCode::InvalidFiltration, "two different steps share an index");
        if (!s.contains(prev))
            throw Error(ErrorCode::InvalidFiltration, "filtration steps are not nested");
        if (s != prev) {
            f.idx_.push_back(idx[order[o]]);
            f.sub_.push_back(s);
        }
        prev = s;
    }
    if (!prev.is_full())
        throw Error(ErrorCode::InvalidFiltration, "filtration is not exhaustive");
    return f;
}

template <class T> Filtration<T> Filtration<T>::trivial(std::size_t n, Direction d, int k)
{
    int i = d == Direction::Increasing ? k : -k;
    return normalize(n, d, {i}, {Subspace<T>::full(n)});
}

template <class T> Filtration<T> Filtration<T>::from_steps(std::size_t n, Direction d, std::vector<Step> steps)
{
    std::vector<int> idx;
    std::vector<Subspace<T>> sub;
    for (auto& [k, s] : steps) {
        idx.push_back(d == Direction::Increasing ? k : -k);
        sub.push_back(std::move(s));
    }
    return normalize(n, d, idx, sub);
}

template <class T>
Filtration<T> Filtration<T>::build(std::size_t n, Direction d, int a, int b, const std::function<Subspace<T>(int)>& f)
{
    std::vector<Step> steps;
    for (int k = a; k <= b; ++k)
        steps.emplace_back(k, f(k));
    return from_steps(n, d, std::move(steps));
}

template <class T> Subspace<T> Filtration<T>::at(int k) const
{
    int i = internal(k);
    auto it = std::upper_bound(idx_.begin(), idx_.end(), i);
    if (it == idx_.begin())
        return Subspace<T>::zero(n_);
    return sub_[static_cast<std::size_t>(it - idx_.begin()) - 1];
}

template <class T> int Filtration<T>::lo() const
{
    if (idx_.empty())
        return 0;
    return increasing() ? idx_.front() : -idx_.back();
}

template <class T> int Filtration<T>::hi() const
{
    if (idx_.empty())
        return -1;
    return increasing() ? idx_.back() : -idx_.front();
}

template <class T> std::pair<Subspace<T>, Subspace<T>> Filtration<T>::graded_piece(int k) const
{
    return {at(k), at(increasing() ? k - 1 : k + 1)};
}

template <class T> Quotient<T> Filtration<T>::graded(int k) const
{
    auto [s, q] = graded_piece(k);
    return Quotient<T>(s, q);
}

template <class T> std::size_t Filtration<T>::graded_dim(int k) const
{
    auto [s, q] = graded_piece(k);
    return s.dim() - q.dim();
}

template <class T> std::vector<typename Filtration<T>::Step> Filtration<T>::steps() const
{
    std::vector<Step> out;
    for (std::size_t i = 0; i < idx_.size(); ++i)
        out.emplace_back(internal(idx_[i]), sub_[i]);
    return out;
}

template <class T> std::vector<int> Filtration<T>::jumps() const
{
    std::vector<int> out;
    for (int i : idx_)
        out.push_back(internal(i));
    return out;
}

template <class T> Filtration<T> Filtration<T>::shifted(int s) const
{
    Filtration f = *this;
    for (int& i : f.idx_)
        i -= increasing() ? s : -s;
    return f;
}

template <class T> Filtration<T> Filtration<T>::induced(const Quotient<T>& q) const
{
    require(q.ambient() == n_, ErrorCode::DimensionMismatch, "induced filtration: ambient dims differ");
    std::vector<int> idx = idx_;
    std::vector<Subspace<T>> sub;
    for (const auto& s : sub_)
        sub.push_back(q.coords(s));
    if (idx.empty()) {
        idx.push_back(0);
        sub.push_back(Subspace<T>::full(q.dim()));
    }
    return normalize(q.dim(), dir_, idx, sub);
}

template <class T> Filtration<T> Filtration<T>::on_image(const Matrix<T>& f) const
{
    require(f.cols() == n_, ErrorCode::DimensionMismatch, "image filtration: source dim");
    Quotient<T> img(image(f), Subspace<T>::zero(f.rows()));
    std::vector<int> idx = idx_;
    std::vector<Subspace<T>> sub;
    for (const auto& s : sub_)
        sub.push_back(img.coords(apply(f, s)));
    if (idx.empty()) {
        idx.push_back(0);
        sub.push_back(Subspace<T>::full(img.dim()));
    }
    return normalize(img.dim(), dir_, idx, sub);
}

template <class T> bool Filtration<T>::preserved_by(const Matrix<T>& f, const Filtration& target) const
{
    for (std::size_t i = 0; i < idx_.size(); ++i)
        if (!maps_into(f, sub_[i], target.at(internal(idx_[i]))))
            return false;
    return true;
}

template class Filtration<Rational>;
template class Filtration<Gaussian>;

Filtration<Gaussian> complexify(const Filtration<Rational>& f)
{
    std::vector<Filtration<Gaussian>::Step> steps;
    for (const auto& [k, s] : f.steps())
        steps.emplace_back(k, complexify(s));
    if (steps.empty())
        return Filtration<Gaussian>::trivial(f.ambient(), f.direction(), 0);
    return Filtration<Gaussian>::from_steps(f.ambient(), f.direction(), steps);
}

Filtration<Gaussian> conj(const Filtration<Gaussian>& f)
{
    std::vector<Filtration<Gaussian>::Step> steps;
    for (const auto& [k, s] : f.steps())
        steps.emplace_back(k, conj(s));
    if (steps.empty())
        return Filtration<Gaussian>::trivial(f.ambient(), f.direction(), 0);
    return Filtration<Gaussian>::from_steps(f.ambient(), f.direction(), steps);
}

} // namespace mhl
