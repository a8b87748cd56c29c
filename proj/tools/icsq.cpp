// icsq: intersection cohomology of filtered face sets over GF(2), with
// perverse cup_i products and Steenrod squares.
//
// Commands:
//   validate INPUT
//   build {cone|suspension|coneoff|trivial} INPUT [--n N] [--out PATH]
//   cohomology INPUT --perversity P [--perversity Q ...] [--degrees a..b]
//   squares INPUT --perversity P [--i LIST] [--degrees a..b]
//   verify INPUT [--perversity P ...] [--seed N]
//
// Exit codes: 0 ok, 1 validation or property failure, 2 IO/parse failure.

#include <CLI11.hpp>

#include "icsq/fixtures.hpp"
#include "icsq/isolated.hpp"
#include "icsq/squares.hpp"
#include "icsq/verify.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace icsq;

struct RunConfig {
    std::string command;
    std::string input;
    std::string build_kind;
    std::vector<std::string> perversity_specs;
    std::string degrees = "";
    std::string i_list = "0,1,2";
    std::string format = "table";
    uint64_t seed = 0;
    int formal_dim = -1;
    std::string out;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out);
    if (!out)
        throw ParseError("cannot write '" + cfg.out + "'");
    out << text;
}

std::pair<int, int> parse_degree_range(const std::string& spec, int lo_default, int hi_default)
{
    if (spec.empty())
        return {lo_default, hi_default};
    const auto dots = spec.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("--degrees expects a..b");
    return {std::stoi(spec.substr(0, dots)), std::stoi(spec.substr(dots + 2))};
}

std::vector<int> parse_int_list(const std::string& spec)
{
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows, bool csv)
{
    std::ostringstream os;
    if (csv) {
        for (std::size_t c = 0; c < header.size(); ++c)
            os << (c ? "," : "") << header[c];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                os << (c ? "," : "") << csv_quote(row[c]);
            os << "\n";
        }
        return os.str();
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c)
        width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << row[c];
            if (c + 1 < row.size())
                os << std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << "\n";
    };
    line(header);
    for (const auto& row : rows)
        line(row);
    return os.str();
}

std::string display_perversity(const Perversity& p)
{
    std::string s = p.to_string();
    return s.empty() ? "()" : s;
}

int cmd_validate(const RunConfig& cfg)
{
    try {
        parse_filtered(slurp(cfg.input));
    } catch (const ValidationError& e) {
        for (const auto& v : e.violations)
            std::cout << v.simplex << ": " << v.kind << ": " << v.detail << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    std::cout << "ok\n";
    return 0;
}

FaceSet plain_input(const FilteredFaceSet& k)
{
    auto plain = as_plain(k);
    if (!plain)
        throw std::invalid_argument(
            "builder input must be a plain complex (formal dimension 0 or trivially filtered)");
    return *plain;
}

int cmd_build(const RunConfig& cfg)
{
    FilteredFaceSet in = parse_filtered(slurp(cfg.input));
    FaceSet base = plain_input(in);
    int n = cfg.formal_dim;
    FilteredFaceSet out;
    if (cfg.build_kind == "trivial") {
        if (n < 0)
            n = std::max(base.max_dim(), 0);
        out = trivial_filtration(base, n);
    } else if (cfg.build_kind == "cone") {
        if (n < 0)
            n = base.max_dim() + 1;
        out = cone(base, n);
    } else if (cfg.build_kind == "suspension") {
        if (n < 0)
            n = base.max_dim() + 1;
        out = suspension(base, n);
    } else if (cfg.build_kind == "coneoff") {
        if (n < 0)
            n = base.max_dim();
        out = cone_off_boundary(base, boundary_components(base), n);
    } else {
        throw std::invalid_argument("unknown build kind '" + cfg.build_kind + "'");
    }
    emit(cfg, serialize(out));
    return 0;
}

std::vector<Perversity> parse_perversities(const RunConfig& cfg, int n)
{
    std::vector<Perversity> out;
    for (const auto& spec : cfg.perversity_specs)
        out.push_back(parse_perversity(spec, n));
    if (out.empty())
        out.push_back(Perversity::zero(n));
    return out;
}

int cmd_cohomology(const RunConfig& cfg)
{
    FilteredFaceSet k = parse_filtered(slurp(cfg.input));
    Engine eng(std::move(k));
    const auto pervs = parse_perversities(cfg, eng.formal_dim());
    const auto [lo, hi] = parse_degree_range(cfg.degrees, 0, eng.max_degree());

    std::vector<std::vector<std::string>> rows;
    for (const auto& p : pervs)
        for (int deg = lo; deg <= hi; ++deg)
            rows.push_back({display_perversity(p), std::to_string(deg),
                            std::to_string(eng.cohomology(p, deg).dim())});
    emit(cfg, render_table({"perversity", "degree", "dim"}, rows, cfg.format == "csv"));
    return 0;
}

int cmd_squares(const RunConfig& cfg)
{
    FilteredFaceSet k = parse_filtered(slurp(cfg.input));
    Engine eng(std::move(k));
    if (cfg.perversity_specs.size() > 1)
        throw std::invalid_argument("squares expects a single --perversity");
    const Perversity p = parse_perversities(cfg, eng.formal_dim()).front();
    const auto [lo, hi] = parse_degree_range(cfg.degrees, 0, eng.max_degree());
    const std::vector<int> is = parse_int_list(cfg.i_list);

    std::vector<std::vector<std::string>> rows;
    for (int deg = lo; deg <= hi; ++deg) {
        const Presentation& h = eng.cohomology(p, deg);
        for (std::size_t j = 0; j < h.dim(); ++j) {
            gf2::BitVec cls(h.dim());
            cls.set(j);
            for (int i : is) {
                SquareResult s = eng.steenrod_square(p, deg, cls, i);
                rows.push_back({"H^" + std::to_string(deg) + "[" + std::to_string(j) + "]",
                                std::to_string(i), display_perversity(s.target_p),
                                s.target_coords.to_string(), pdeg_to_string(s.witness_pdeg),
                                s.image_2p.to_string()});
            }
        }
    }
    emit(cfg,
         render_table({"class", "i", "target_perversity", "coords", "witness_perverse_degree",
                       "image_in_2p"},
                      rows, cfg.format == "csv"));
    return 0;
}

int cmd_verify(const RunConfig& cfg)
{
    FilteredFaceSet k = parse_filtered(slurp(cfg.input));
    Engine eng(std::move(k));
    VerifyOptions opt;
    opt.seed = cfg.seed;
    for (const auto& spec : cfg.perversity_specs)
        opt.perversities.push_back(parse_perversity(spec, eng.formal_dim()));
    const auto reports = verify_suite(eng, opt);
    emit(cfg, format_report(reports));
    return all_pass(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mod-2 intersection cohomology, cup_i products and Steenrod squares "
                 "of filtered face sets"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input)
            sub->add_option("input", cfg.input, "complex file (JSON)")->required();
        sub->add_option("--out", cfg.out, "write output to a file");
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and validate a complex file");
    add_common(validate);

    CLI::App* build = app.add_subcommand("build", "build a filtered complex from a plain one");
    build->add_option("kind", cfg.build_kind, "cone|suspension|coneoff|trivial")->required();
    add_common(build);
    build->add_option("--n", cfg.formal_dim, "formal dimension of the output");

    CLI::App* coh = app.add_subcommand("cohomology", "intersection cohomology dimensions");
    add_common(coh);
    coh->add_option("--perversity", cfg.perversity_specs,
                    "comma list for depths 1..n, token inf allowed; repeatable");
    coh->add_option("--degrees", cfg.degrees, "degree range a..b");
    coh->add_option("--format", cfg.format, "table|csv")->check(CLI::IsMember({"table", "csv"}));

    CLI::App* sq = app.add_subcommand("squares", "Steenrod squares on H^*_p");
    add_common(sq);
    sq->add_option("--perversity", cfg.perversity_specs, "source perversity");
    sq->add_option("--i", cfg.i_list, "comma list of i values");
    sq->add_option("--degrees", cfg.degrees, "degree range a..b");
    sq->add_option("--format", cfg.format, "table|csv")->check(CLI::IsMember({"table", "csv"}));

    CLI::App* verify = app.add_subcommand("verify", "run the structural property suite");
    add_common(verify);
    verify->add_option("--perversity", cfg.perversity_specs, "perversities to exercise; repeatable");
    verify->add_option("--seed", cfg.seed, "seed for the randomized properties");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) {
            cfg.command = "validate";
            return cmd_validate(cfg);
        }
        if (build->parsed()) {
            cfg.command = "build";
            return cmd_build(cfg);
        }
        if (coh->parsed()) {
            cfg.command = "cohomology";
            return cmd_cohomology(cfg);
        }
        if (sq->parsed()) {
            cfg.command = "squares";
            return cmd_squares(cfg);
        }
        if (verify->parsed()) {
            cfg.command = "verify";
            return cmd_verify(cfg);
        }
    } catch (const ValidationError& e) {
        std::cerr << "invalid complex: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
