#include "icsq/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace icsq {

namespace {

gf2::BitVec random_bits(std::mt19937_64& rng, std::size_t n)
{
    gf2::BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1)
            v.set(i);
    return v;
}

GlobalSection random_section(Engine& eng, std::mt19937_64& rng, int degree)
{
    const gf2::Subspace& s = eng.blowup().global_sections(degree);
    GlobalSection out = zero_section(eng.blowup(), degree);
    if (s.dim() == 0)
        return out;
    gf2::BitVec coeff = random_bits(rng, s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j)
        if (coeff.get(j))
            out.v ^= s.basis[j];
    return out;
}

long pdeg_sum(long a, long b)
{
    if (a == PDEG_NEG_INF || b == PDEG_NEG_INF)
        return PDEG_NEG_INF;
    return a + b;
}

struct Runner {
    Engine& eng;
    const VerifyOptions& opt;
    std::vector<PropertyReport> reports;

    PropertyReport* current = nullptr;

    void begin(const std::string& name)
    {
        reports.push_back(PropertyReport{name, true, 0, ""});
        current = &reports.back();
    }

    void check(bool ok, const std::string& witness)
    {
        ++current->checks;
        if (!ok && current->pass) {
            current->pass = false;
            current->detail = witness;
        }
    }
};

std::string deg_pair(int a, int b, int i)
{
    std::ostringstream os;
    os << "degrees (" << a << "," << b << "), i=" << i;
    return os.str();
}

} // namespace

std::vector<Perversity> default_perversities(int n)
{
    std::vector<Perversity> out;
    if (n == 0) {
        out.push_back(Perversity(0, {}));
        return out;
    }
    const std::vector<long> small = n <= 2 ? std::vector<long>{-1, 0, 1, 2}
                                           : std::vector<long>{0, 1, 2};
    if (n <= 3) {
        std::vector<long> cur(n, 0);
        std::function<void(int)> rec = [&](int l) {
            if (l == n) {
                out.push_back(Perversity(n, cur));
                return;
            }
            for (long v : small) {
                cur[l] = v;
                rec(l + 1);
            }
        };
        rec(0);
    } else {
        out.push_back(Perversity::zero(n));
        out.push_back(Perversity::constant(n, 1));
        out.push_back(Perversity::constant(n, 2));
        out.push_back(Perversity::top(n));
        out.push_back(Perversity::infinite(n));
    }
    return out;
}

std::vector<PropertyReport> verify_suite(Engine& eng, const VerifyOptions& opt)
{
    Blowup& bl = eng.blowup();
    const int n = bl.formal_dim();
    const int maxdeg = bl.max_degree();
    std::mt19937_64 rng(opt.seed);

    std::vector<Perversity> pervs =
        opt.perversities.empty() ? default_perversities(n) : opt.perversities;
    std::vector<Perversity> square_pervs;
    for (const auto& p : pervs) {
        bool nonneg = true;
        for (int l = 1; l <= n; ++l)
            nonneg = nonneg && p.at(l) >= 0 && p.at(l) != PERV_INF;
        if (nonneg)
            square_pervs.push_back(p);
        if (square_pervs.size() == 4)
            break;
    }
    if (square_pervs.empty())
        square_pervs.push_back(Perversity::zero(n));

    std::vector<int> live_degrees;
    for (int k = 0; k <= maxdeg; ++k)
        if (bl.global_sections(k).dim() > 0)
            live_degrees.push_back(k);

    auto cup = [&](const GlobalSection& a, const GlobalSection& b, int i) {
        GlobalSection r = cup_i_global(bl, a, b, i);
        // test hook: an argument-asymmetric error that Leibniz must detect
        if (opt.corrupt_cup && i == 0 && r.v.size() > 0 && a.v.count() > b.v.count())
            r.v.flip(0);
        return r;
    };
    auto pick_degree = [&]() {
        return live_degrees[rng() % live_degrees.size()];
    };

    Runner run{eng, opt, {}, nullptr};

    // delta squared vanishes on every section basis vector
    run.begin("delta-squared");
    for (int k = 0; k + 2 <= maxdeg + 1; ++k)
        for (const auto& b : bl.global_sections(k).basis) {
            gf2::BitVec dd = bl.apply_delta(k + 1, bl.apply_delta(k, b));
            run.check(dd.is_zero(), "degree " + std::to_string(k));
        }

    // Leibniz: d(u cup_i v) = u cup_{i-1} v + v cup_{i-1} u + du cup_i v + u cup_i dv
    run.begin("leibniz");
    if (!live_degrees.empty())
        for (int t = 0; t < opt.random_pairs; ++t) {
            GlobalSection u = random_section(eng, rng, pick_degree());
            GlobalSection v = random_section(eng, rng, pick_degree());
            for (int i = 0; i <= std::min(u.degree, v.degree) + 1; ++i) {
                GlobalSection lhs = section_coboundary(bl, cup(u, v, i));
                GlobalSection rhs = cup(u, v, i - 1);
                rhs.v ^= cup(v, u, i - 1).v;
                rhs.v ^= cup(section_coboundary(bl, u), v, i).v;
                rhs.v ^= cup(u, section_coboundary(bl, v), i).v;
                run.check(lhs.v == rhs.v, deg_pair(u.degree, v.degree, i) + ", pair " + std::to_string(t));
            }
        }

    // niceness: c cup_{|c|} c = c and vanishing above the minimum degree
    run.begin("niceness");
    if (!live_degrees.empty())
        for (int t = 0; t < opt.random_pairs; ++t) {
            GlobalSection c = random_section(eng, rng, pick_degree());
            GlobalSection sq = cup_i_global(bl, c, c, c.degree);
            run.check(sq.v == c.v, "c cup_d c != c at degree " + std::to_string(c.degree));
            GlobalSection d = random_section(eng, rng, pick_degree());
            for (int extra = 1; extra <= 2; ++extra) {
                GlobalSection z = cup_i_global(bl, c, d, std::min(c.degree, d.degree) + extra);
                run.check(z.v.is_zero(), deg_pair(c.degree, d.degree, std::min(c.degree, d.degree) + extra));
            }
        }

    // top-commutativity in equal degrees
    run.begin("top-commutativity");
    if (!live_degrees.empty())
        for (int t = 0; t < opt.random_pairs; ++t) {
            const int k = pick_degree();
            GlobalSection a = random_section(eng, rng, k);
            GlobalSection b = random_section(eng, rng, k);
            GlobalSection ab = cup_i_global(bl, a, b, k);
            GlobalSection ba = cup_i_global(bl, b, a, k);
            run.check(ab.v == ba.v, "degree " + std::to_string(k));
        }

    // equivariance: one extra tau twist swaps the arguments
    run.begin("equivariance");
    if (!live_degrees.empty())
        for (int t = 0; t < opt.random_pairs / 4 + 1; ++t) {
            GlobalSection a = random_section(eng, rng, pick_degree());
            GlobalSection b = random_section(eng, rng, pick_degree());
            for (int i = 0; i <= std::min(a.degree, b.degree); ++i) {
                GlobalSection tw = cup_i_global(bl, a, b, i, 1);
                GlobalSection sw = cup_i_global(bl, b, a, i);
                run.check(tw.v == sw.v, deg_pair(a.degree, b.degree, i));
            }
        }

    // results of cup are global sections, and perverse degree is subadditive
    run.begin("cup-section-compatibility");
    if (!live_degrees.empty())
        for (int t = 0; t < opt.random_pairs / 4 + 1; ++t) {
            GlobalSection a = random_section(eng, rng, pick_degree());
            GlobalSection b = random_section(eng, rng, pick_degree());
            for (int i = 0; i <= std::min(a.degree, b.degree); ++i) {
                GlobalSection w = cup_i_global(bl, a, b, i);
                if (w.degree < 0)
                    continue;
                gf2::BitVec residue = bl.constraints(w.degree).mul(w.v);
                run.check(residue.is_zero(), deg_pair(a.degree, b.degree, i));
            }
        }

    run.begin("perverse-subadditivity");
    if (!live_degrees.empty())
        for (int t = 0; t < opt.random_pairs / 2 + 1; ++t) {
            GlobalSection a = random_section(eng, rng, pick_degree());
            GlobalSection b = random_section(eng, rng, pick_degree());
            PerverseDegree da = bl.perverse_degree(a.degree, a.v);
            PerverseDegree db = bl.perverse_degree(b.degree, b.v);
            for (int i = 0; i <= std::min(a.degree, b.degree); ++i) {
                GlobalSection w = cup_i_global(bl, a, b, i);
                if (w.degree < 0)
                    continue;
                PerverseDegree dw = bl.perverse_degree(w.degree, w.v);
                for (int l = 0; l < n; ++l) {
                    const long bound = pdeg_sum(da[l], db[l]);
                    const bool ok = dw[l] == PDEG_NEG_INF ||
                                    (bound != PDEG_NEG_INF && dw[l] <= bound);
                    run.check(ok, deg_pair(a.degree, b.degree, i) + ", depth " + std::to_string(l + 1));
                }
            }
            // support-max bound for sums
            if (a.degree == b.degree) {
                GlobalSection s = a;
                s.v ^= b.v;
                PerverseDegree ds = bl.perverse_degree(s.degree, s.v);
                for (int l = 0; l < n; ++l) {
                    const long m = std::max(da[l], db[l]);
                    run.check(ds[l] <= m || ds[l] == PDEG_NEG_INF,
                              "sum support bound, depth " + std::to_string(l + 1));
                }
            }
        }

    // sup over all simplices agrees with sup over maximal ones
    run.begin("perverse-degree-on-maximal");
    if (!live_degrees.empty())
        for (int t = 0; t < opt.random_pairs / 4 + 1; ++t) {
            GlobalSection c = random_section(eng, rng, pick_degree());
            run.check(bl.perverse_degree(c.degree, c.v) ==
                          bl.perverse_degree(c.degree, c.v, true),
                      "degree " + std::to_string(c.degree));
        }

    // monotonicity of the intersection subcomplexes
    run.begin("monotonicity");
    for (const auto& p : pervs)
        for (const auto& q : pervs) {
            if (!(leq(p, q)))
                continue;
            for (int k = 0; k <= maxdeg; ++k) {
                const gf2::Subspace& np = bl.intersection_subcomplex(p, k);
                const gf2::Subspace& nq = bl.intersection_subcomplex(q, k);
                bool ok = true;
                for (const auto& b : np.basis)
                    ok = ok && nq.contains(b);
                run.check(ok, "p=" + p.to_string() + " q=" + q.to_string() + " k=" + std::to_string(k));
            }
        }

    // delta preserves the intersection subcomplex
    run.begin("delta-preserves-intersection");
    for (const auto& p : pervs)
        for (int k = 0; k < maxdeg; ++k) {
            const gf2::Subspace& np = bl.intersection_subcomplex(p, k);
            const gf2::Subspace& np1 = bl.intersection_subcomplex(p, k + 1);
            bool ok = true;
            for (const auto& b : np.basis)
                ok = ok && np1.contains(bl.apply_delta(k, b));
            run.check(ok, "p=" + p.to_string() + " k=" + std::to_string(k));
        }

    // squares: basics, representative independence, GP bound, factorization
    run.begin("sq-basics");
    for (const auto& p : square_pervs)
        for (int k = 0; k <= maxdeg; ++k) {
            const Presentation& h = eng.cohomology(p, k);
            for (std::size_t j = 0; j < h.dim(); ++j) {
                gf2::BitVec cls(h.dim());
                cls.set(j);
                SquareResult s0 = eng.steenrod_square(p, k, cls, 0);
                gf2::BitMatrix inc = eng.induced_map(p, gp_lift(p, 0), k);
                run.check(s0.target_coords == inc.mul(cls),
                          "Sq^0 != inclusion at p=" + p.to_string() + " k=" + std::to_string(k));
                SquareResult stop = eng.steenrod_square(p, k, cls, k);
                GlobalSection z = eng.representative(p, k, cls);
                GlobalSection zz = cup_i_global(bl, z, z, 0);
                auto direct = eng.cohomology(gp_lift(p, k), 2 * k).express(zz.v);
                run.check(direct && stop.target_coords == *direct,
                          "Sq^k != square at p=" + p.to_string() + " k=" + std::to_string(k));
                SquareResult sbig = eng.steenrod_square(p, k, cls, k + 1);
                run.check(sbig.target_coords.is_zero(),
                          "Sq^{k+1} != 0 at p=" + p.to_string() + " k=" + std::to_string(k));
            }
        }

    run.begin("sq-representative-independence");
    for (const auto& p : square_pervs)
        for (int k = 0; k <= maxdeg; ++k) {
            const Presentation& h = eng.cohomology(p, k);
            if (h.dim() == 0 || k == 0)
                continue;
            const gf2::Subspace& below = bl.intersection_subcomplex(p, k - 1);
            for (std::size_t j = 0; j < h.dim(); ++j) {
                gf2::BitVec cls(h.dim());
                cls.set(j);
                GlobalSection z = eng.representative(p, k, cls);
                GlobalSection z2 = z;
                if (below.dim() > 0) {
                    gf2::BitVec coeff = random_bits(rng, below.dim());
                    for (std::size_t b = 0; b < below.dim(); ++b)
                        if (coeff.get(b))
                            z2.v ^= bl.apply_delta(k - 1, below.basis[b]);
                }
                for (int i = 0; i <= k; ++i) {
                    const Perversity lp = gp_lift(p, i);
                    GlobalSection w1 = cup_i_global(bl, z, z, k - i);
                    GlobalSection w2 = cup_i_global(bl, z2, z2, k - i);
                    auto c1 = eng.cohomology(lp, k + i).express(w1.v);
                    auto c2 = eng.cohomology(lp, k + i).express(w2.v);
                    run.check(c1 && c2 && *c1 == *c2,
                              "p=" + p.to_string() + " k=" + std::to_string(k) + " i=" + std::to_string(i));
                }
            }
        }

    run.begin("gp-bound-and-2p-factorization");
    for (const auto& p : square_pervs)
        for (int k = 0; k <= maxdeg; ++k) {
            const Presentation& h = eng.cohomology(p, k);
            for (std::size_t j = 0; j < h.dim(); ++j) {
                gf2::BitVec cls(h.dim());
                cls.set(j);
                for (int i = 0; i <= k + 1; ++i) {
                    bool ok = true;
                    std::string why;
                    try {
                        SquareResult s = eng.steenrod_square(p, k, cls, i);
                        ok = pdeg_leq(s.witness_pdeg, s.target_p);
                        gf2::BitMatrix inc =
                            eng.induced_map(s.target_p, double_perversity(p), k + i);
                        ok = ok && inc.mul(s.target_coords) == s.image_2p;
                        if (!ok)
                            why = "factorization through 2p";
                    } catch (const std::exception& e) {
                        ok = false;
                        why = e.what();
                    }
                    run.check(ok, "p=" + p.to_string() + " k=" + std::to_string(k) +
                                      " i=" + std::to_string(i) + " " + why);
                }
            }
        }

    // Cartan formula at r = min(2p+2q, p+q+i)
    run.begin("cartan");
    {
        std::vector<Perversity> cart(square_pervs.begin(),
                                     square_pervs.begin() + std::min<std::size_t>(square_pervs.size(), 3));
        for (const auto& p : cart)
            for (const auto& q : cart)
                for (int r = 0; r <= maxdeg; ++r)
                    for (int s = 0; s + r <= maxdeg; ++s) {
                        const Presentation& hp = eng.cohomology(p, r);
                        const Presentation& hq = eng.cohomology(q, s);
                        if (hp.dim() == 0 || hq.dim() == 0)
                            continue;
                        for (std::size_t a = 0; a < hp.dim(); ++a)
                            for (std::size_t b = 0; b < hq.dim(); ++b) {
                                gf2::BitVec ca(hp.dim()), cb(hq.dim());
                                ca.set(a);
                                cb.set(b);
                                GlobalSection x = eng.representative(p, r, ca);
                                GlobalSection y = eng.representative(q, s, cb);
                                GlobalSection xy = cup_i_global(bl, x, y, 0);
                                for (int i = 0; i <= r + s + 1; ++i) {
                                    const Perversity rbar = gp_lift(sum(p, q), i);
                                    GlobalSection lhs = cup_i_global(bl, xy, xy, r + s - i);
                                    GlobalSection rhs = zero_section(bl, r + s + i);
                                    for (int i1 = 0; i1 <= i; ++i1) {
                                        GlobalSection sx = cup_i_global(bl, x, x, r - i1);
                                        GlobalSection sy = cup_i_global(bl, y, y, s - (i - i1));
                                        rhs.v ^= cup_i_global(bl, sx, sy, 0).v;
                                    }
                                    auto cl = eng.cohomology(rbar, r + s + i).express(lhs.v);
                                    auto cr = eng.cohomology(rbar, r + s + i).express(rhs.v);
                                    run.check(cl && cr && *cl == *cr,
                                              "p=" + p.to_string() + " q=" + q.to_string() +
                                                  " r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                                  " i=" + std::to_string(i));
                                }
                            }
                    }
    }

    // Adem instances reachable in desk degrees
    run.begin("adem-sq1sq1");
    for (const auto& p : square_pervs)
        for (int k = 0; k <= maxdeg; ++k) {
            const Presentation& h = eng.cohomology(p, k);
            for (std::size_t j = 0; j < h.dim(); ++j) {
                gf2::BitVec cls(h.dim());
                cls.set(j);
                SquareResult s1 = eng.steenrod_square(p, k, cls, 1);
                SquareResult s11 = eng.steenrod_square(s1.target_p, k + 1, s1.target_coords, 1);
                run.check(s11.target_coords.is_zero(),
                          "p=" + p.to_string() + " k=" + std::to_string(k));
            }
        }

    run.begin("adem-sq1sq2");
    for (const auto& p : square_pervs)
        for (int k = 0; k <= maxdeg; ++k) {
            const Presentation& h = eng.cohomology(p, k);
            for (std::size_t j = 0; j < h.dim(); ++j) {
                gf2::BitVec cls(h.dim());
                cls.set(j);
                SquareResult s2 = eng.steenrod_square(p, k, cls, 2);
                SquareResult s12 = eng.steenrod_square(s2.target_p, k + 2, s2.target_coords, 1);
                SquareResult s3 = eng.steenrod_square(p, k, cls, 3);
                // compare inside r = min(4p, 2p+1, p+3) = L(L(p,2),1)
                const Perversity rbar = s12.target_p;
                if (!leq(s3.target_p, rbar))
                    continue;
                gf2::BitMatrix inc = eng.induced_map(s3.target_p, rbar, k + 3);
                run.check(s12.target_coords == inc.mul(s3.target_coords),
                          "p=" + p.to_string() + " k=" + std::to_string(k));
            }
        }

    return run.reports;
}

std::string format_report(const std::vector<PropertyReport>& reports)
{
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (checks=" << r.checks << ")";
        if (!r.pass)
            os << " witness: " << r.detail;
        os << "\n";
    }
    return os.str();
}

bool all_pass(const std::vector<PropertyReport>& reports)
{
    for (const auto& r : reports)
        if (!r.pass)
            return false;
    return true;
}

} // namespace icsq
