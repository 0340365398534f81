#include "morselab/face_poset.hpp"

#include "morselab/error.hpp"

#include <algorithm>
#include <map>

namespace morselab {

namespace {

constexpr std::uint64_t fnv_offset = 1469598103934665603ULL;
constexpr std::uint64_t fnv_prime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t value)
{
    for (int i = 0; i < 8; ++i) {
        h ^= (value >> (8 * i)) & 0xffu;
        h *= fnv_prime;
    }
}

}  // namespace

FacePoset FacePoset::from_cells(std::vector<int> dims, std::vector<std::vector<int>> faces)
{
    if (dims.size() != faces.size())
        fail(ErrorKind::invalid_input, "dimension and boundary lists differ in length");
    const int n = static_cast<int>(dims.size());
    for (int c = 0; c < n; ++c) {
        if (dims[static_cast<std::size_t>(c)] < 0)
            fail(ErrorKind::invalid_input, "cell " + std::to_string(c) + " has negative dimension");
        auto& f = faces[static_cast<std::size_t>(c)];
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            fail(ErrorKind::invalid_input, "cell " + std::to_string(c) + " lists a face twice");
        for (int x : f) {
            if (x < 0 || x >= n)
                fail(ErrorKind::invalid_input, "cell " + std::to_string(c) + " refers to unknown cell " +
                                                   std::to_string(x));
            if (dims[static_cast<std::size_t>(x)] + 1 != dims[static_cast<std::size_t>(c)])
                fail(ErrorKind::invalid_input,
                     "poset is not graded: cell " + std::to_string(c) + " covers cell " +
                         std::to_string(x) + " of non-adjacent dimension");
        }
        if (dims[static_cast<std::size_t>(c)] > 0 && f.empty())
            fail(ErrorKind::invalid_input,
                 "poset is not graded: cell " + std::to_string(c) + " of positive dimension has no faces");
    }
    FacePoset p;
    p.dims_ = std::move(dims);
    p.faces_ = std::move(faces);
    p.finish();
    return p;
}

void FacePoset::finish()
{
    const std::size_t n = dims_.size();
    cofaces_.assign(n, {});
    max_dim_ = -1;
    for (std::size_t c = 0; c < n; ++c) {
        max_dim_ = std::max(max_dim_, dims_[c]);
        for (int f : faces_[c]) cofaces_[static_cast<std::size_t>(f)].push_back(static_cast<int>(c));
    }
    by_dim_.assign(static_cast<std::size_t>(max_dim_ + 1), {});
    for (std::size_t c = 0; c < n; ++c) by_dim_[static_cast<std::size_t>(dims_[c])].push_back(static_cast<int>(c));
}

const std::vector<int>& FacePoset::cells_of_dim(int k) const
{
    static const std::vector<int> none;
    if (k < 0 || k > max_dim_) return none;
    return by_dim_[static_cast<std::size_t>(k)];
}

std::vector<std::size_t> FacePoset::counts_by_dim() const
{
    std::vector<std::size_t> out;
    for (const auto& v : by_dim_) out.push_back(v.size());
    return out;
}

long long FacePoset::euler_characteristic() const
{
    long long chi = 0;
    for (std::size_t k = 0; k < by_dim_.size(); ++k)
        chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(by_dim_[k].size());
    return chi;
}

void FacePoset::set_boundary_mask(std::vector<char> mask)
{
    if (mask.empty()) {
        boundary_.clear();
        return;
    }
    if (mask.size() != size()) fail(ErrorKind::invalid_input, "boundary mask has the wrong length");
    for (std::size_t c = 0; c < size(); ++c)
        if (mask[c])
            for (int f : faces_[c])
                if (!mask[static_cast<std::size_t>(f)])
                    fail(ErrorKind::invalid_input, "boundary mask is not closed under faces");
    boundary_ = std::move(mask);
}

std::optional<int> FacePoset::find(const Simplex& s) const
{
    if (!simplicial_) return std::nullopt;
    auto it = simplicial_->index.find(s);
    if (it == simplicial_->index.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> FacePoset::cell_labels(int c) const
{
    std::vector<std::string> out;
    if (!simplicial_) return out;
    for (Vertex v : vertices(c)) out.push_back(simplicial_->labels[static_cast<std::size_t>(v)]);
    return out;
}

std::optional<int> FacePoset::find_labels(std::vector<std::string> labels) const
{
    if (!simplicial_) return std::nullopt;
    const auto& all = simplicial_->labels;
    Simplex s;
    for (const auto& l : labels) {
        auto it = std::lower_bound(all.begin(), all.end(), l, label_less);
        if (it == all.end() || *it != l) return std::nullopt;
        s.push_back(static_cast<Vertex>(it - all.begin()));
    }
    std::sort(s.begin(), s.end());
    return find(s);
}

std::string FacePoset::cell_name(int c) const
{
    if (!names_.empty()) return names_[static_cast<std::size_t>(c)];
    if (simplicial_) {
        std::string out = "{";
        const auto& vs = vertices(c);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) out += ",";
            out += simplicial_->labels[static_cast<std::size_t>(vs[i])];
        }
        return out + "}";
    }
    return "c" + std::to_string(c);
}

std::uint64_t FacePoset::structural_hash() const
{
    std::uint64_t h = fnv_offset;
    fnv_mix(h, size());
    for (std::size_t c = 0; c < size(); ++c) {
        fnv_mix(h, static_cast<std::uint64_t>(dims_[c]));
        fnv_mix(h, faces_[c].size());
        for (int f : faces_[c]) fnv_mix(h, static_cast<std::uint64_t>(f));
    }
    return h;
}

bool FacePoset::has_diamond_property() const
{
    std::map<int, int> between;
    for (std::size_t c = 0; c < size(); ++c) {
        between.clear();
        for (int f : faces_[c])
            for (int g : faces_[static_cast<std::size_t>(f)]) ++between[g];
        for (const auto& [g, count] : between)
            if (count != 2) return false;
    }
    return true;
}

bool FacePoset::boundary_squared_vanishes_mod2() const
{
    std::map<int, int> parity;
    for (std::size_t c = 0; c < size(); ++c) {
        parity.clear();
        for (int f : faces_[c])
            for (int g : faces_[static_cast<std::size_t>(f)]) parity[g] ^= 1;
        for (const auto& [g, bit] : parity)
            if (bit) return false;
    }
    return true;
}

bool FacePoset::is_graded() const
{
    for (std::size_t c = 0; c < size(); ++c) {
        for (int f : faces_[c])
            if (dims_[static_cast<std::size_t>(f)] + 1 != dims_[c]) return false;
        if (dims_[c] > 0 && faces_[c].empty()) return false;
    }
    return true;
}

FacePoset FacePoset::opposite() const
{
    FacePoset p;
    p.dims_.resize(size());
    for (std::size_t c = 0; c < size(); ++c) p.dims_[c] = max_dim_ - dims_[c];
    p.faces_ = cofaces_;
    p.finish();
    if (!names_.empty()) p.names_ = names_;
    return p;
}

FacePoset FacePoset::restrict_to(const std::vector<char>& keep, std::vector<int>* old_to_new) const
{
    std::vector<int> remap(size(), -1);
    std::vector<int> dims;
    std::vector<std::vector<int>> faces;
    int next = 0;
    for (std::size_t c = 0; c < size(); ++c)
        if (keep[c]) remap[c] = next++;
    for (std::size_t c = 0; c < size(); ++c) {
        if (!keep[c]) continue;
        dims.push_back(dims_[c]);
        std::vector<int> f;
        for (int x : faces_[c]) {
            if (remap[static_cast<std::size_t>(x)] < 0)
                fail(ErrorKind::invalid_input, "restriction is not closed under faces");
            f.push_back(remap[static_cast<std::size_t>(x)]);
        }
        faces.push_back(std::move(f));
    }
    FacePoset p = from_cells(std::move(dims), std::move(faces));
    if (!boundary_.empty()) {
        std::vector<char> mask(p.size(), 0);
        for (std::size_t c = 0; c < size(); ++c)
            if (keep[c]) mask[static_cast<std::size_t>(remap[c])] = boundary_[c];
        p.boundary_ = std::move(mask);
    }
    if (simplicial_) {
        auto data = std::make_shared<SimplicialData>();
        data->labels = simplicial_->labels;
        for (std::size_t c = 0; c < size(); ++c)
            if (keep[c]) {
                data->vertices.push_back(simplicial_->vertices[c]);
                data->index.emplace(simplicial_->vertices[c], remap[c]);
            }
        p.simplicial_ = std::move(data);
    }
    if (!names_.empty()) {
        for (std::size_t c = 0; c < size(); ++c)
            if (keep[c]) p.names_.push_back(names_[c]);
    }
    if (old_to_new) *old_to_new = std::move(remap);
    return p;
}

FacePoset face_poset(const SimplicialComplex& k)
{
    FacePoset p;
    auto data = std::make_shared<FacePoset::SimplicialData>();
    data->labels = k.labels();
    for (int d = 0; d <= k.dim(); ++d)
        for (const auto& s : k.faces(d)) {
            data->index.emplace(s, static_cast<int>(data->vertices.size()));
            data->vertices.push_back(s);
        }
    const std::size_t n = data->vertices.size();
    p.dims_.resize(n);
    p.faces_.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        const Simplex& s = data->vertices[c];
        p.dims_[c] = static_cast<int>(s.size()) - 1;
        if (s.size() < 2) continue;
        auto& f = p.faces_[c];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex t;
            t.reserve(s.size() - 1);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (j != i) t.push_back(s[j]);
            f.push_back(data->index.at(t));
        }
        std::sort(f.begin(), f.end());
    }
    p.finish();

    if (k.is_pure() && k.dim() >= 1) {
        std::vector<char> mask(n, 0);
        const int d = k.dim();
        for (int r : p.cells_of_dim(d - 1)) {
            if (p.cofaces(r).size() != 1) continue;
            // Mark the ridge and all of its faces.
            std::vector<int> stack{r};
            while (!stack.empty()) {
                int c = stack.back();
                stack.pop_back();
                if (mask[static_cast<std::size_t>(c)]) continue;
                mask[static_cast<std::size_t>(c)] = 1;
                for (int f : p.faces(c)) stack.push_back(f);
            }
        }
        p.boundary_ = std::move(mask);
    }
    p.simplicial_ = std::move(data);
    return p;
}

}  // namespace morselab
