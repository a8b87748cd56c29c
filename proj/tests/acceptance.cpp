// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact; each criterion also carries a wall-time
// budget that is enforced.

#include "icsq/cohomology.hpp"
#include "icsq/fixtures.hpp"
#include "icsq/isolated.hpp"
#include "icsq/squares.hpp"
#include "icsq/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace icsq;

namespace {

struct Criterion {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok) {
            ++failures;
            if (first_failure.empty())
                first_failure = what;
        }
    }
};

struct Outcome {
    bool pass = false;
    double seconds = 0.0;
    std::size_t checks = 0;
    std::string detail;
};

Outcome run_criterion(double budget_seconds, const std::function<void(Criterion&)>& body)
{
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.check(false, std::string("exception: ") + e.what());
    }
    const auto t1 = std::chrono::steady_clock::now();
    Outcome o;
    o.seconds = std::chrono::duration<double>(t1 - t0).count();
    o.checks = c.checks;
    o.pass = c.failures == 0 && o.seconds < budget_seconds;
    if (c.failures > 0) {
        std::ostringstream os;
        os << c.failures << "/" << c.checks << " checks failed; first: " << c.first_failure;
        o.detail = os.str();
    } else if (o.seconds >= budget_seconds) {
        o.detail = "time budget exceeded";
    }
    return o;
}

std::vector<Perversity> all_perversities(int n, const std::vector<long>& values)
{
    std::vector<Perversity> out;
    std::vector<long> cur(n, 0);
    std::function<void(int)> rec = [&](int l) {
        if (l == n) {
            out.push_back(Perversity(n, cur));
            return;
        }
        for (long v : values) {
            cur[l] = v;
            rec(l + 1);
        }
    };
    rec(0);
    return out;
}

// Canonical identification for trivial filtrations: a global section is the
// classical cochain read off the tensor faces with full last factor.
Cochain project_trivial(const Blowup& bl, const FaceSet& f, const GlobalSection& s)
{
    Cochain u = zero_cochain(f, s.degree);
    const int n = bl.formal_dim();
    for (int cell : f.cells_of_dim(s.degree)) {
        const int fc = bl.complex().find(f.id(cell));
        TensorFace full(n + 1, 1u);
        full[n] = (1u << (f.cell(cell).dim + 1)) - 1;
        if (s.v.get(bl.coord_index(s.degree, fc, full)))
            u.c.set(f.pos_in_dim(cell));
    }
    return u;
}

// Matrix of the identification H^k_p(trivial f) -> H^k(f).
gf2::BitMatrix identification(Engine& eng, const ClassicalOracle& oracle, const Perversity& p,
                              int k)
{
    const Presentation& hp = eng.cohomology(p, k);
    const Presentation& hc = oracle.cohomology(k);
    std::vector<gf2::BitVec> cols;
    for (std::size_t j = 0; j < hp.dim(); ++j) {
        gf2::BitVec e(hp.dim());
        e.set(j);
        GlobalSection rep = eng.representative(p, k, e);
        Cochain u = project_trivial(eng.blowup(), oracle.face_set(), rep);
        auto coords = hc.express(u.c);
        if (!coords)
            throw std::logic_error("identification: projected representative is not a cocycle");
        cols.push_back(*coords);
    }
    return gf2::BitMatrix::from_columns(cols, hc.dim());
}

struct NamedComplex {
    std::string name;
    FaceSet plain;
    int n;
};

void criterion1(Criterion& c)
{
    const std::vector<NamedComplex> corpus = {
        {"point", fixtures::point(), 1},      {"circle", fixtures::circle(), 1},
        {"torus", fixtures::torus(), 2},      {"klein", fixtures::klein_bottle(), 2},
        {"rp2", fixtures::rp2(), 2},
    };
    const std::vector<long> values = {-1, 0, 1, 2, PERV_INF};
    for (const auto& item : corpus) {
        ClassicalOracle oracle(item.plain);
        Engine eng(trivial_filtration(item.plain, item.n));
        for (const Perversity& p : all_perversities(item.n, values)) {
            for (int k = 0; k <= item.plain.max_dim() + 1; ++k) {
                const std::size_t want = k <= item.plain.max_dim() ? oracle.cohomology(k).dim() : 0;
                c.check(eng.cohomology(p, k).dim() == want,
                        item.name + " dim H^" + std::to_string(k) + " p=" + p.to_string());
            }
            for (int k = 0; k <= item.plain.max_dim(); ++k) {
                gf2::BitMatrix t_src = identification(eng, oracle, p, k);
                c.check(gf2::rank_and_kernel(t_src).rank == oracle.cohomology(k).dim(),
                        item.name + " identification rank k=" + std::to_string(k));
                for (int i = 0; i <= k + 1; ++i) {
                    const Perversity lp = gp_lift(p, i);
                    gf2::BitMatrix t_tgt = identification(eng, oracle, lp, k + i);
                    const Presentation& src = eng.cohomology(p, k);
                    for (std::size_t j = 0; j < src.dim(); ++j) {
                        gf2::BitVec e(src.dim());
                        e.set(j);
                        SquareResult s = eng.steenrod_square(p, k, e, i);
                        gf2::BitVec classical = oracle.sq(k, i, t_src.mul(e));
                        c.check(t_tgt.mul(s.target_coords) == classical,
                                item.name + " Sq^" + std::to_string(i) + " on H^" +
                                    std::to_string(k) + " p=" + p.to_string());
                    }
                }
            }
        }
    }
}

void criterion2(Criterion& c)
{
    const std::vector<NamedComplex> bases = {
        {"circle", fixtures::circle(), 2},
        {"torus", fixtures::torus(), 3},
        {"rp2", fixtures::rp2(), 3},
    };
    for (const auto& item : bases) {
        ClassicalOracle oracle(item.plain);
        Engine eng(cone(item.plain, item.n));
        for (long v = 0; v <= 3; ++v) {
            std::vector<long> pv(item.n, 0);
            pv[item.n - 1] = v;
            const Perversity p(item.n, pv);
            for (int r = 0; r <= eng.max_degree(); ++r) {
                const std::size_t want =
                    r <= v && r <= item.plain.max_dim() ? oracle.cohomology(r).dim() : 0;
                c.check(eng.cohomology(p, r).dim() == want,
                        "cone(" + item.name + ") H^" + std::to_string(r) +
                            " at value " + std::to_string(v));
            }
        }
    }
}

void criterion3(Criterion& c)
{
    // M = cone_off_boundary(moebius): W = moebius band
    {
        FaceSet mob = fixtures::mobius_band();
        auto comps = boundary_components(mob);
        IsolatedModel model(mob, comps[0]);
        Engine eng(cone_off_boundary(mob, comps, 2));
        for (long v = 0; v <= 2; ++v) {
            const Perversity p(2, {0, v});
            for (int k = 0; k <= eng.max_degree(); ++k)
                c.check(eng.cohomology(p, k).dim() == model.table_dim(v, k),
                        "moebius cone-off H^" + std::to_string(k) + " at value " +
                            std::to_string(v));
        }
    }
    // M = suspension(rp2): W = rp2 x I
    {
        Prism w = prism(fixtures::rp2());
        std::set<int> ends(w.bottom.begin(), w.bottom.end());
        ends.insert(w.top.begin(), w.top.end());
        IsolatedModel model(w.fs, ends);
        Engine eng(suspension(fixtures::rp2(), 3));
        for (long v = 0; v <= 2; ++v) {
            const Perversity p(3, {0, 0, v});
            for (int k = 0; k <= eng.max_degree(); ++k)
                c.check(eng.cohomology(p, k).dim() == model.table_dim(v, k),
                        "suspension(rp2) H^" + std::to_string(k) + " at value " +
                            std::to_string(v));
        }
    }
}

void criterion4(Criterion& c)
{
    {
        Engine eng(trivial_filtration(fixtures::rp2(), 2));
        const Perversity p = Perversity::zero(2);
        c.check(eng.cohomology(p, 1).dim() == 1, "rp2 dim H^1");
        c.check(eng.cohomology(gp_lift(p, 1), 2).dim() == 1, "rp2 dim H^2");
        gf2::BitVec one(1);
        one.set(0);
        SquareResult s = eng.steenrod_square(p, 1, one, 1);
        c.check(s.target_coords.size() == 1 && s.target_coords.get(0),
                "Sq^1 on H^1(rp2) is [1]");
    }
    {
        Engine eng(suspension(fixtures::rp2(), 3));
        const Perversity p = Perversity::zero(3);
        c.check(eng.cohomology(p, 2).dim() == 1, "suspension(rp2) dim H^2 at 0");
        c.check(eng.cohomology(gp_lift(p, 1), 3).dim() == 1, "suspension(rp2) dim H^3 at L(0,1)");
        gf2::BitVec one(1);
        one.set(0);
        SquareResult s = eng.steenrod_square(p, 2, one, 1);
        c.check(s.target_coords.size() == 1 && s.target_coords.get(0),
                "suspension commutation: Sq^1 on H^2 is [1]");
    }
}

void criterion5(Criterion& c)
{
    FaceSet mob = fixtures::mobius_band();
    auto comps = boundary_components(mob);
    IsolatedModel model(mob, comps[0]);
    Engine eng(cone_off_boundary(mob, comps, 2));
    for (long v = 0; v <= 2; ++v) {
        const Perversity p(2, {0, v});
        for (int k = 0; k <= 2; ++k) {
            const Presentation& h = eng.cohomology(p, k);
            c.check(h.dim() == model.cohomology(v, k).dim(),
                    "pullback model dim k=" + std::to_string(k));
            c.check(h.dim() <= 1, "pullback comparison needs canonical scalars");
            for (int i = 0; i <= k + 1; ++i) {
                gf2::BitMatrix ref = model.sq_matrix(v, k, i);
                for (std::size_t j = 0; j < h.dim(); ++j) {
                    gf2::BitVec cls(h.dim());
                    cls.set(j);
                    SquareResult s = eng.steenrod_square(p, k, cls, i);
                    const bool blow = s.target_coords.size() > 0 && s.target_coords.get(0);
                    const bool pullback = ref.rows() > 0 && ref.get(0, j);
                    c.check(s.target_coords.size() == ref.rows() && blow == pullback,
                            "Sq^" + std::to_string(i) + " on H^" + std::to_string(k) +
                                " at value " + std::to_string(v));
                }
            }
        }
    }
}

struct CorpusEntry {
    std::string name;
    FilteredFaceSet complex;
};

std::vector<CorpusEntry> verify_corpus()
{
    FaceSet mob = fixtures::mobius_band();
    std::vector<CorpusEntry> out;
    out.push_back({"trivial(point)", trivial_filtration(fixtures::point(), 1)});
    out.push_back({"trivial(circle)", trivial_filtration(fixtures::circle(), 1)});
    out.push_back({"trivial(rp2)", trivial_filtration(fixtures::rp2(), 2)});
    out.push_back({"trivial(torus)", trivial_filtration(fixtures::torus(), 2)});
    out.push_back({"trivial(klein)", trivial_filtration(fixtures::klein_bottle(), 2)});
    out.push_back({"cone(circle)", cone(fixtures::circle(), 2)});
    out.push_back({"cone(rp2)", cone(fixtures::rp2(), 3)});
    out.push_back({"suspension(circle)", suspension(fixtures::circle(), 2)});
    out.push_back({"suspension(rp2)", suspension(fixtures::rp2(), 3)});
    out.push_back({"coneoff(moebius)", cone_off_boundary(mob, boundary_components(mob), 2)});
    return out;
}

} // namespace

int main()
{
    std::vector<std::pair<std::string, Outcome>> lines;

    lines.emplace_back(
        "criterion 1: trivial-filtration oracle equivalence (dims and Sq matrices)",
        run_criterion(30.0, criterion1));
    lines.emplace_back("criterion 2: cone formula for circle, torus, rp2",
                       run_criterion(60.0, criterion2));
    lines.emplace_back("criterion 3: isolated-singularity tables (moebius cone-off, "
                       "suspension of rp2)",
                       run_criterion(60.0, criterion3));
    lines.emplace_back("criterion 4: nontrivial Sq^1 on rp2 and its suspension",
                       run_criterion(30.0, criterion4));
    lines.emplace_back("criterion 5: blow-up squares equal the pullback-model squares",
                       run_criterion(60.0, criterion5));

    // criteria 6 and 7 share one run of the property suite over the corpus
    std::vector<std::pair<std::string, std::vector<PropertyReport>>> all_reports;
    Outcome seven = run_criterion(600.0, [&](Criterion& c) {
        for (auto& entry : verify_corpus()) {
            Engine eng(std::move(entry.complex));
            VerifyOptions opt;
            opt.seed = 0;
            opt.random_pairs = 200;
            auto reports = verify_suite(eng, opt);
            for (const auto& r : reports) {
                c.check(r.pass, entry.name + ": " + r.name + " (" + r.detail + ")");
                c.checks += r.checks - 1;   // count the suite's inner assertions
            }
            all_reports.emplace_back(entry.name, reports);
        }
    });
    Outcome six;
    six.pass = true;
    six.seconds = 0.0;
    for (const auto& [name, reports] : all_reports)
        for (const auto& r : reports)
            if (r.name == "gp-bound-and-2p-factorization") {
                six.checks += r.checks;
                if (!r.pass) {
                    six.pass = false;
                    if (six.detail.empty())
                        six.detail = name + ": " + r.detail;
                }
            }
    if (all_reports.empty()) {
        six.pass = false;
        six.detail = "property suite did not run";
    }
    lines.emplace_back(
        "criterion 6: Goresky-Pardon bound and factorization through doubled perversity "
        "(bundled with criterion 7)",
        six);
    lines.emplace_back("criterion 7: property suite on the corpus, seed 0", seven);

    bool all_ok = true;
    for (const auto& [name, o] : lines) {
        all_ok = all_ok && o.pass;
        std::printf("%s %s [checks=%zu, %.2fs]%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                    o.checks, o.seconds, o.detail.empty() ? "" : " -- ", o.detail.c_str());
    }
    return all_ok ? 0 : 1;
}
