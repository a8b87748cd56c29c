#include "icsq/filtered.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace icsq {

namespace {

std::string format_violations(const std::vector<Violation>& vs)
{
    std::ostringstream os;
    os << vs.size() << " violation(s)";
    for (const auto& v : vs)
        os << "; [" << v.simplex << "] " << v.kind << ": " << v.detail;
    return os.str();
}

} // namespace

ValidationError::ValidationError(std::vector<Violation> v)
    : std::runtime_error(format_violations(v)), violations(std::move(v))
{
}

int FilteredFaceSet::find(const std::string& id) const
{
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

int FilteredFaceSet::total_vertices(int c) const
{
    int t = 0;
    for (int j : cells_[c].blocks)
        t += j + 1;
    return t;
}

std::pair<int, int> FilteredFaceSet::position_block(int c, int v) const
{
    int rest = v;
    for (int b = 0; b <= n_; ++b) {
        const int count = cells_[c].blocks[b] + 1;
        if (rest < count)
            return {b, rest};
        rest -= count;
    }
    throw std::out_of_range("position_block: position beyond simplex");
}

void FilteredBuilder::add(const std::string& id, std::vector<int> blocks,
                          std::vector<std::string> faces)
{
    if (id.empty())
        throw ParseError("empty simplex id");
    if (static_cast<int>(blocks.size()) != n_ + 1)
        throw ParseError("simplex '" + id + "': blocks must have " + std::to_string(n_ + 1) +
                         " entries");
    for (int j : blocks)
        if (j < -1)
            throw ParseError("simplex '" + id + "': block dimension below -1");
    auto [it, fresh] = staged_.emplace(id, std::make_pair(std::move(blocks), std::move(faces)));
    if (!fresh)
        throw ParseError("duplicate simplex id '" + id + "'");
}

FilteredFaceSet FilteredBuilder::freeze() const
{
    FilteredFaceSet k;
    k.n_ = n_;
    for (const auto& [id, entry] : staged_) {
        k.index_[id] = static_cast<int>(k.ids_.size());
        k.ids_.push_back(id);
    }
    for (const auto& [id, entry] : staged_) {
        const auto& [blocks, face_ids] = entry;
        int verts = 0;
        for (int j : blocks)
            verts += j + 1;
        if (verts < 1)
            throw ParseError("simplex '" + id + "': no vertices");
        const std::size_t expected = verts == 1 ? 0 : static_cast<std::size_t>(verts);
        if (face_ids.size() != expected)
            throw ParseError("simplex '" + id + "': expected " + std::to_string(expected) +
                             " faces, got " + std::to_string(face_ids.size()));
        FilteredFaceSet::Cell cell;
        cell.blocks = blocks;
        for (const std::string& f : face_ids) {
            auto it = k.index_.find(f);
            if (it == k.index_.end())
                throw ParseError("simplex '" + id + "': unknown face id '" + f + "'");
            cell.faces.push_back(it->second);
        }
        k.cells_.push_back(std::move(cell));
    }
    std::vector<char> is_face(k.cells_.size(), 0);
    for (std::size_t c = 0; c < k.cells_.size(); ++c) {
        if (k.regular(static_cast<int>(c)))
            k.k_plus_.push_back(static_cast<int>(c));
        for (int f : k.cells_[c].faces)
            is_face[f] = 1;
    }
    for (std::size_t c = 0; c < k.cells_.size(); ++c)
        if (!is_face[c])
            k.maximal_.push_back(static_cast<int>(c));
    return k;
}

std::vector<Violation> validate(const FilteredFaceSet& k)
{
    std::vector<Violation> out;
    for (std::size_t ci = 0; ci < k.size(); ++ci) {
        const int c = static_cast<int>(ci);
        const auto& cell = k.cell(c);
        const int verts = k.total_vertices(c);

        bool decrement_ok = true;
        for (int v = 0; v < verts && verts > 1; ++v) {
            auto [b, local] = k.position_block(c, v);
            const auto& face = k.cell(cell.faces[v]);
            std::vector<int> expected = cell.blocks;
            expected[b] -= 1;
            if (face.blocks != expected) {
                out.push_back({k.id(c), "filtration-decrement",
                               "face at position " + std::to_string(v) +
                                   " ('" + k.id(cell.faces[v]) + "') has wrong blocks"});
                decrement_ok = false;
            }
            (void)local;
        }
        if (!decrement_ok || verts < 3)
            continue;
        for (int b = 1; b < verts; ++b)
            for (int a = 0; a < b; ++a) {
                const int left = k.cell(cell.faces[b]).faces[a];
                const int right = k.cell(cell.faces[a]).faces[b - 1];
                if (left != right)
                    out.push_back({k.id(c), "simplicial-identity",
                                   "d_" + std::to_string(a) + " d_" + std::to_string(b) +
                                       " != d_" + std::to_string(b - 1) + " d_" + std::to_string(a)});
            }
    }
    return out;
}

FilteredFaceSet parse_filtered(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("formal_dimension") || !j.contains("simplices"))
        throw ParseError("parse error: expected object with formal_dimension and simplices");
    if (!j["formal_dimension"].is_number_integer())
        throw ParseError("parse error: formal_dimension must be an integer");
    const int n = j["formal_dimension"].get<int>();
    if (n < 0)
        throw ParseError("parse error: formal_dimension must be >= 0");
    if (!j["simplices"].is_object())
        throw ParseError("parse error: simplices must be an object");

    FilteredBuilder b(n);
    for (const auto& [id, entry] : j["simplices"].items()) {
        if (!entry.is_object() || !entry.contains("blocks") || !entry.contains("faces"))
            throw ParseError("simplex '" + id + "': expected blocks and faces");
        if (!entry["blocks"].is_array() || !entry["faces"].is_array())
            throw ParseError("simplex '" + id + "': blocks and faces must be arrays");
        std::vector<int> blocks;
        for (const auto& x : entry["blocks"]) {
            if (!x.is_number_integer())
                throw ParseError("simplex '" + id + "': non-integer block entry");
            blocks.push_back(x.get<int>());
        }
        std::vector<std::string> faces;
        for (const auto& x : entry["faces"]) {
            if (!x.is_string())
                throw ParseError("simplex '" + id + "': non-string face id");
            faces.push_back(x.get<std::string>());
        }
        b.add(id, std::move(blocks), std::move(faces));
    }
    FilteredFaceSet k = b.freeze();
    auto violations = validate(k);
    if (!violations.empty())
        throw ValidationError(std::move(violations));
    return k;
}

std::string serialize(const FilteredFaceSet& k)
{
    nlohmann::ordered_json j;
    j["formal_dimension"] = k.formal_dim();
    nlohmann::ordered_json simplices = nlohmann::ordered_json::object();
    // ids_ are already sorted lexicographically by construction
    for (std::size_t c = 0; c < k.size(); ++c) {
        nlohmann::ordered_json entry;
        entry["blocks"] = k.cell(static_cast<int>(c)).blocks;
        std::vector<std::string> faces;
        for (int f : k.cell(static_cast<int>(c)).faces)
            faces.push_back(k.id(f));
        entry["faces"] = faces;
        simplices[k.id(static_cast<int>(c))] = entry;
    }
    j["simplices"] = simplices;
    return j.dump(2) + "\n";
}

// ---- perversity ----

namespace {

long clamp_value(long v)
{
    if (v == PERV_INF)
        return v;
    return std::max(-PERV_CLAMP, std::min(PERV_CLAMP, v));
}

long add_values(long a, long b)
{
    if (a == PERV_INF || b == PERV_INF)
        return PERV_INF;
    return clamp_value(a + b);
}

} // namespace

Perversity::Perversity(int n, std::vector<long> values) : n_(n), v_(std::move(values))
{
    if (static_cast<int>(v_.size()) != n_)
        throw std::invalid_argument("perversity: expected " + std::to_string(n_) + " values");
    for (long& x : v_)
        x = clamp_value(x);
}

Perversity Perversity::constant(int n, long v)
{
    return Perversity(n, std::vector<long>(n, v));
}

Perversity Perversity::top(int n)
{
    std::vector<long> v(n, 0);
    for (int l = 2; l <= n; ++l)
        v[l - 1] = l - 2;
    return Perversity(n, std::move(v));
}

long Perversity::at(int l) const
{
    if (l < 1 || l > n_)
        throw std::out_of_range("perversity index");
    return v_[l - 1];
}

bool Perversity::is_perversity() const
{
    long prev = 0;   // p(0) = 0
    for (long x : v_) {
        if (x == PERV_INF || x < prev || x > prev + 1)
            return false;
        prev = x;
    }
    return true;
}

bool Perversity::is_gm() const
{
    if (!is_perversity())
        return false;
    for (int l = 1; l <= std::min(n_, 2); ++l)
        if (at(l) != 0)
            return false;
    return true;
}

std::string Perversity::to_string() const
{
    std::string s;
    for (int l = 1; l <= n_; ++l) {
        if (l > 1)
            s += ',';
        s += v_[l - 1] == PERV_INF ? "inf" : std::to_string(v_[l - 1]);
    }
    return s;
}

Perversity sum(const Perversity& p, const Perversity& q)
{
    if (p.n_ != q.n_)
        throw std::invalid_argument("perversity sum: dimension mismatch");
    std::vector<long> v(p.n_);
    for (int l = 0; l < p.n_; ++l)
        v[l] = add_values(p.v_[l], q.v_[l]);
    return Perversity(p.n_, std::move(v));
}

Perversity double_perversity(const Perversity& p)
{
    return sum(p, p);
}

bool leq(const Perversity& p, const Perversity& q)
{
    if (p.n_ != q.n_)
        throw std::invalid_argument("perversity compare: dimension mismatch");
    for (int l = 1; l <= p.n_; ++l) {
        const long a = p.at(l), b = q.at(l);
        if (b == PERV_INF)
            continue;
        if (a == PERV_INF || a > b)
            return false;
    }
    return true;
}

Perversity gp_lift(const Perversity& p, int i)
{
    std::vector<long> v(p.formal_dim());
    for (int l = 1; l <= p.formal_dim(); ++l) {
        const long x = p.at(l);
        v[l - 1] = x == PERV_INF ? PERV_INF : std::min(add_values(x, x), x + i);
    }
    return Perversity(p.formal_dim(), std::move(v));
}

Perversity parse_perversity(const std::string& text, int n)
{
    std::vector<long> v;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "inf" || tok == "+inf")
                v.push_back(PERV_INF);
            else {
                std::size_t used = 0;
                long x = 0;
                try {
                    x = std::stol(tok, &used);
                } catch (const std::exception&) {
                    throw std::invalid_argument("perversity: bad entry '" + tok + "'");
                }
                if (used != tok.size())
                    throw std::invalid_argument("perversity: bad entry '" + tok + "'");
                v.push_back(x);
            }
        }
    }
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("perversity '" + text + "' has " + std::to_string(v.size()) +
                                    " entries, complex needs " + std::to_string(n));
    return Perversity(n, std::move(v));
}

// ---- builders ----

namespace {

std::vector<int> trivial_blocks(int n, int dim)
{
    std::vector<int> b(n + 1, -1);
    b[n] = dim;
    return b;
}

} // namespace

FilteredFaceSet trivial_filtration(const FaceSet& f, int n)
{
    FilteredBuilder b(n);
    for (std::size_t c = 0; c < f.size(); ++c) {
        std::vector<std::string> faces;
        for (int fid : f.cell(static_cast<int>(c)).faces)
            faces.push_back(f.id(fid));
        b.add(f.id(static_cast<int>(c)), trivial_blocks(n, f.cell(static_cast<int>(c)).dim), faces);
    }
    return b.freeze();
}

namespace {

// Shared by cone / suspension / cone_off_boundary: adds, for every simplex
// of `f` in `subset` (all if empty), the coned simplex prefix+id with the
// apex in block 0, plus the apex itself.
void add_cone_part(FilteredBuilder& b, const FaceSet& f, int n, const std::string& prefix,
                   const std::string& apex_id, const std::set<int>* subset)
{
    std::vector<int> apex_blocks(n + 1, -1);
    apex_blocks[0] = 0;
    b.add(apex_id, apex_blocks, {});
    for (std::size_t ci = 0; ci < f.size(); ++ci) {
        const int c = static_cast<int>(ci);
        if (subset && !subset->count(c))
            continue;
        const auto& cell = f.cell(c);
        std::vector<int> blocks(n + 1, -1);
        blocks[0] = 0;
        blocks[n] = cell.dim;
        std::vector<std::string> faces;
        faces.push_back(f.id(c));   // removing the apex vertex leaves the base
        if (cell.dim == 0)
            faces.push_back(apex_id);
        else
            for (int fid : cell.faces)
                faces.push_back(prefix + f.id(fid));
        b.add(prefix + f.id(c), blocks, faces);
    }
}

} // namespace

FilteredFaceSet cone(const FaceSet& f, int n)
{
    if (n < 1)
        throw std::invalid_argument("cone: formal dimension must be >= 1");
    FilteredBuilder b(n);
    for (std::size_t c = 0; c < f.size(); ++c) {
        std::vector<std::string> faces;
        for (int fid : f.cell(static_cast<int>(c)).faces)
            faces.push_back(f.id(fid));
        b.add(f.id(static_cast<int>(c)), trivial_blocks(n, f.cell(static_cast<int>(c)).dim), faces);
    }
    add_cone_part(b, f, n, "c.", "apex", nullptr);
    return b.freeze();
}

FilteredFaceSet suspension(const FaceSet& f, int n)
{
    if (n < 1)
        throw std::invalid_argument("suspension: formal dimension must be >= 1");
    FilteredBuilder b(n);
    for (std::size_t c = 0; c < f.size(); ++c) {
        std::vector<std::string> faces;
        for (int fid : f.cell(static_cast<int>(c)).faces)
            faces.push_back(f.id(fid));
        b.add(f.id(static_cast<int>(c)), trivial_blocks(n, f.cell(static_cast<int>(c)).dim), faces);
    }
    add_cone_part(b, f, n, "b.", "apex.b", nullptr);
    add_cone_part(b, f, n, "t.", "apex.t", nullptr);
    return b.freeze();
}

FilteredFaceSet cone_off_boundary(const FaceSet& f, const std::vector<std::set<int>>& components,
                                  int n)
{
    if (n < 1)
        throw std::invalid_argument("cone_off_boundary: formal dimension must be >= 1");
    std::set<int> seen;
    for (const auto& comp : components) {
        if (!is_subcomplex(f, comp))
            throw std::invalid_argument("cone_off_boundary: component is not face-closed");
        for (int c : comp) {
            if (seen.count(c))
                throw std::invalid_argument("cone_off_boundary: components overlap");
            seen.insert(c);
        }
    }
    FilteredBuilder b(n);
    for (std::size_t c = 0; c < f.size(); ++c) {
        std::vector<std::string> faces;
        for (int fid : f.cell(static_cast<int>(c)).faces)
            faces.push_back(f.id(fid));
        b.add(f.id(static_cast<int>(c)), trivial_blocks(n, f.cell(static_cast<int>(c)).dim), faces);
    }
    for (std::size_t u = 0; u < components.size(); ++u) {
        const std::string tag = "c" + std::to_string(u) + ".";
        add_cone_part(b, f, n, tag, "apex" + std::to_string(u), &components[u]);
    }
    return b.freeze();
}

std::optional<FaceSet> as_plain(const FilteredFaceSet& k)
{
    const int n = k.formal_dim();
    FaceSetBuilder b;
    for (std::size_t c = 0; c < k.size(); ++c) {
        const auto& cell = k.cell(static_cast<int>(c));
        for (int m = 0; m < n; ++m)
            if (cell.blocks[m] != -1)
                return std::nullopt;
        std::vector<std::string> faces;
        for (int f : cell.faces)
            faces.push_back(k.id(f));
        b.add(k.id(static_cast<int>(c)), cell.blocks[n], faces);
    }
    return b.freeze();
}

} // namespace icsq
