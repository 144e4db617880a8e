#include "posetcalc/generators.hpp"

#include <random>

namespace posetcalc {

PosetPtr grid_poset(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("grid: m, n >= 1 required");
    auto label = [](int i, int j) { return std::to_string(i) + "_" + std::to_string(j); };
    auto id = [&](int i, int j) { return j * (m + 1) + i; };
    std::vector<std::string> objs;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= m; ++i) objs.push_back(label(i, j));
    std::vector<Cover> covers;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= m; ++i) {
            if (i < m) covers.emplace_back(id(i, j), id(i + 1, j));
            if (j < n) covers.emplace_back(id(i, j), id(i, j + 1));
        }
    return Poset::from_cover_ids(std::move(objs), std::move(covers));
}

namespace {

Matrix random_invertible(int d, const Field& f, std::mt19937_64& rng) {
    if (d == 0) return Matrix::zero(0, 0, f);
    std::uniform_int_distribution<long> dist(-2, 2);
    for (;;) {
        Matrix u(d, d, f);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) u.set(i, j, Scalar::of_int(dist(rng), f));
        if (u.is_invertible()) return u;
    }
}

}  // namespace

PosetModule gen_grid(int m, int n, unsigned long seed, int max_dim, const Field& f) {
    if (max_dim < 1) throw std::invalid_argument("gen_grid: max_dim >= 1 required");
    PosetPtr p = grid_poset(m, n);
    std::mt19937_64 rng(seed);
    auto id = [&](int i, int j) { return j * (m + 1) + i; };

    // dimensions non-increasing along each row
    std::vector<std::vector<int>> d(m + 1, std::vector<int>(n + 1));
    for (int j = 0; j <= n; ++j) {
        d[0][j] = 1 + static_cast<int>(rng() % max_dim);
        for (int i = 1; i <= m; ++i) {
            int drop = static_cast<int>(rng() % 3) == 0 ? 1 : 0;
            d[i][j] = std::max(0, d[i - 1][j] - drop -
                                      (static_cast<int>(rng() % 4) == 0 ? 1 : 0));
        }
    }

    // master vertical matrices, one per adjacent row pair, with zeros forced
    // so that every square commutes in the canonical coordinates
    std::uniform_int_distribution<long> dist(-3, 3);
    std::vector<Matrix> master(n);
    for (int j = 0; j < n; ++j) {
        Matrix w(d[0][j + 1], d[0][j], f);
        for (int r = 0; r < w.rows(); ++r)
            for (int c = 0; c < w.cols(); ++c) {
                bool forced_zero = false;
                for (int i = 0; i < m && !forced_zero; ++i)
                    if (r < d[i + 1][j + 1] && c >= d[i + 1][j] && c < d[i][j])
                        forced_zero = true;
                if (!forced_zero) w.set(r, c, Scalar::of_int(dist(rng), f));
            }
        master[j] = std::move(w);
    }

    // random base change at every object
    std::vector<std::vector<Matrix>> u(m + 1, std::vector<Matrix>(n + 1));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) u[i][j] = random_invertible(d[i][j], f, rng);

    auto projection = [&](int from, int to) {  // first `to` coordinates
        Matrix pi(to, from, f);
        for (int r = 0; r < to; ++r) pi.set(r, r, Scalar::one(f));
        return pi;
    };

    std::vector<int> dims(p->size());
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) dims[id(i, j)] = d[i][j];
    std::map<Cover, Matrix> maps;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= m; ++i) {
            if (i < m) {
                Matrix h = u[i + 1][j] * projection(d[i][j], d[i + 1][j]) * *u[i][j].inverse();
                maps.emplace(Cover{id(i, j), id(i + 1, j)}, std::move(h));
            }
            if (j < n) {
                Matrix block = master[j].submatrix(0, 0, d[i][j + 1], d[i][j]);
                Matrix v = u[i][j + 1] * block * *u[i][j].inverse();
                maps.emplace(Cover{id(i, j), id(i, j + 1)}, std::move(v));
            }
        }
    return PosetModule(p, f, std::move(dims), std::move(maps));
}

PosetPtr gen_ladder(int n, LadderType type, char orientation) {
    if (n < 2) throw std::invalid_argument("ladder: n >= 2 required");
    // the FFBB pattern must close its two-letter blocks, otherwise the line
    // digraph drops the last rung into a separate component
    if (type == LadderType::DoubleZigzag && n % 2 == 0)
        throw std::invalid_argument("ladder: double zigzag needs an even arrow count (odd n)");
    if (orientation != 'F' && orientation != 'B')
        throw std::invalid_argument("ladder: orientation must be 'F' or 'B'");
    std::vector<std::string> objs;
    for (int i = 1; i <= n; ++i) objs.push_back(std::to_string(i));
    for (int i = 1; i <= n; ++i) objs.push_back(std::to_string(i) + "'");
    auto bottom = [&](int i) { return i - 1; };
    auto top = [&](int i) { return n + i - 1; };

    std::vector<Cover> covers;
    for (int i = 1; i <= n; ++i) covers.emplace_back(bottom(i), top(i));
    for (int k = 1; k < n; ++k) {
        bool forward;
        if (type == LadderType::Zigzag)
            forward = (k % 2 == 1);
        else
            forward = (((k + 1) / 2) % 2 == 1);
        if (orientation == 'B') forward = !forward;
        if (forward) {
            covers.emplace_back(bottom(k), bottom(k + 1));
            covers.emplace_back(top(k), top(k + 1));
        } else {
            covers.emplace_back(bottom(k + 1), bottom(k));
            covers.emplace_back(top(k + 1), top(k));
        }
    }
    return Poset::from_cover_ids(std::move(objs), std::move(covers));
}

}  // namespace posetcalc
