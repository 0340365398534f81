#include "morselab/io.hpp"

#include "morselab/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include "json.hpp"
#include <set>
#include <sstream>

namespace morselab::io {

namespace {

std::string strip_comment(const std::string& line)
{
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::size_t line_of_offset(const std::string& text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace

SimplicialComplex parse_facets(const std::string& text)
{
    std::vector<std::vector<std::string>> facets;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream words(strip_comment(line));
        std::vector<std::string> facet;
        std::string w;
        while (words >> w) facet.push_back(w);
        if (facet.empty()) continue;
        std::set<std::string> seen;
        for (const auto& label : facet)
            if (!seen.insert(label).second) throw ParseError(number, "vertex '" + label + "' repeated in facet");
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw ParseError(number == 0 ? 1 : number, "no facets found");
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex parse_bracketed(const std::string& text)
{
    std::vector<std::vector<std::string>> facets;
    std::size_t line = 1;
    int depth = 0;
    std::vector<std::string> current;
    std::string token;
    std::size_t facet_line = 1;
    auto flush_token = [&] {
        if (!token.empty()) {
            current.push_back(token);
            token.clear();
        }
    };
    bool started = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '\n') ++line;
        if (c == '#' && depth == 0) {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i < text.size()) ++line;
            continue;
        }
        if (!started) {
            if (c == '[') {
                started = true;
                depth = 1;
            }
            continue;
        }
        if (c == '[') {
            ++depth;
            if (depth > 2) throw ParseError(line, "unexpected '[' inside a facet");
            current.clear();
            facet_line = line;
        } else if (c == ']') {
            flush_token();
            if (depth == 2) {
                std::set<std::string> seen;
                for (const auto& l : current)
                    if (!seen.insert(l).second) throw ParseError(facet_line, "vertex '" + l + "' repeated in facet");
                if (current.empty()) throw ParseError(facet_line, "empty facet");
                facets.push_back(current);
            }
            --depth;
            if (depth == 0) break;
        } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            flush_token();
        } else if (depth == 2) {
            token.push_back(c);
        } else {
            throw ParseError(line, std::string("unexpected character '") + c + "'");
        }
    }
    if (depth != 0) throw ParseError(line, "unbalanced brackets");
    if (facets.empty()) throw ParseError(line, "no facets found");
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex parse_complex(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto body = strip_comment(line);
        auto pos = body.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (body.find('[') != std::string::npos) return parse_bracketed(text);
        break;
    }
    return parse_facets(text);
}

std::string format_facets(const SimplicialComplex& k)
{
    std::string out;
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ' ';
            out += k.label(f[i]);
        }
        out += '\n';
    }
    return out;
}

FacePoset parse_poset_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte), "malformed JSON");
    }
    if (!doc.is_array()) throw ParseError(1, "poset JSON must be an array of cells");
    struct Raw {
        long long id;
        int dim;
        std::vector<long long> boundary;
        bool on_boundary;
        bool has_flag;
    };
    std::vector<Raw> raw;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& cell = doc[i];
        try {
            Raw r{cell.at("id").get<long long>(), cell.at("dim").get<int>(),
                  cell.value("boundary", std::vector<long long>{}), cell.value("on_boundary", false),
                  cell.contains("on_boundary")};
            raw.push_back(std::move(r));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(1, "cell " + std::to_string(i) + ": " + e.what());
        }
    }
    std::stable_sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.id < b.id;
    });
    std::map<long long, int> index;
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (!index.emplace(raw[i].id, static_cast<int>(i)).second)
            throw ParseError(1, "duplicate cell id " + std::to_string(raw[i].id));
    std::vector<int> dims;
    std::vector<std::vector<int>> faces;
    std::vector<std::string> names;
    bool any_flag = false;
    std::vector<char> mask;
    for (const auto& r : raw) {
        dims.push_back(r.dim);
        std::vector<int> f;
        for (long long b : r.boundary) {
            auto it = index.find(b);
            if (it == index.end())
                throw ParseError(1, "cell " + std::to_string(r.id) + " refers to unknown cell " + std::to_string(b));
            f.push_back(it->second);
        }
        faces.push_back(std::move(f));
        names.push_back(std::to_string(r.id));
        mask.push_back(r.on_boundary ? 1 : 0);
        any_flag = any_flag || r.has_flag;
    }
    FacePoset p = FacePoset::from_cells(std::move(dims), std::move(faces));
    p.set_names(std::move(names));
    if (any_flag) p.set_boundary_mask(std::move(mask));
    return p;
}

std::string format_poset_json(const FacePoset& p)
{
    nlohmann::json doc = nlohmann::json::array();
    for (std::size_t c = 0; c < p.size(); ++c) {
        nlohmann::json cell;
        cell["id"] = c;
        cell["dim"] = p.dim(static_cast<int>(c));
        cell["boundary"] = p.faces(static_cast<int>(c));
        if (p.has_boundary_mask()) cell["on_boundary"] = p.on_boundary(static_cast<int>(c));
        doc.push_back(std::move(cell));
    }
    return doc.dump() + "\n";
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::io, "cannot open '" + path.string() + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::io, "cannot write '" + path.string() + "'");
    out << text;
}

std::filesystem::path resolve_data_path(const std::string& name)
{
    std::filesystem::path p(name);
    if (std::filesystem::exists(p) || p.is_absolute()) return p;
    if (const char* root = std::getenv("MORSELAB_DATA")) {
        auto q = std::filesystem::path(root) / p;
        if (std::filesystem::exists(q)) return q;
        q = std::filesystem::path(root) / p.filename();
        if (std::filesystem::exists(q)) return q;
    }
    return p;
}

SimplicialComplex read_complex(const std::string& name)
{
    return parse_complex(read_text(resolve_data_path(name)));
}

}  // namespace morselab::io
