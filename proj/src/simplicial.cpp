#include "cdindex/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cdx {

int SimplicialComplex::dim() const {
    int d = -1;
    for (auto& f : facets) d = std::max(d, int(f.size()) - 1);
    return d;
}

SimplicialComplex makeComplex(std::vector<std::string> vnames, std::vector<std::vector<int>> faces) {
    SimplicialComplex k;
    k.vnames = std::move(vnames);
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= int(k.vnames.size()))
                throw CdxError("DanglingReference", "face mentions vertex index " + std::to_string(v));
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < faces.size() && !dominated; ++j)
            if (i != j && faces[i].size() <= faces[j].size())
                dominated = std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end()) &&
                            faces[i] != faces[j];
        if (!dominated) k.facets.push_back(faces[i]);
    }
    return k;
}

SimplicialComplex orderComplex(const GradedPoset& p) {
    SimplicialComplex k;
    k.vnames = p.id;
    for (auto& chain : maximalChains(p)) {
        std::vector<int> f = chain;
        std::sort(f.begin(), f.end());
        k.facets.push_back(std::move(f));
    }
    if (k.facets.empty()) k.facets.push_back({}); // order complex of {0-hat} is {empty face}
    std::sort(k.facets.begin(), k.facets.end());
    return k;
}

std::vector<std::vector<std::vector<int>>> facesByDim(const SimplicialComplex& k) {
    int d = k.isVoid() ? -1 : k.dim();
    std::vector<std::set<std::vector<int>>> acc(std::size_t(d + 2));
    for (auto& f : k.facets) {
        /* enumerate subsets; facet sizes stay small (poset rank scale) */
        if (f.size() > 25) throw CdxError("OutOfRange", "facet too large for subset enumeration");
        for (std::uint32_t m = 0; m < (1u << f.size()); ++m) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < f.size(); ++i)
                if ((m >> i) & 1u) sub.push_back(f[std::size_t(i)]);
            acc[sub.size()].insert(std::move(sub));
        }
    }
    std::vector<std::vector<std::vector<int>>> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i].assign(acc[i].begin(), acc[i].end());
    return out;
}

std::vector<long long> fVector(const SimplicialComplex& k) {
    auto faces = facesByDim(k);
    std::vector<long long> f;
    for (auto& layer : faces) f.push_back((long long)layer.size());
    if (f.empty()) f.push_back(0);
    return f;
}

SimplicialComplex linkOfFace(const SimplicialComplex& k, const std::vector<int>& face) {
    std::vector<int> s = face;
    std::sort(s.begin(), s.end());
    std::vector<std::vector<int>> faces;
    for (auto& f : k.facets) {
        if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
        std::vector<int> rest;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
        faces.push_back(std::move(rest));
    }
    SimplicialComplex out = makeComplex(k.vnames, std::move(faces));
    return out; // void exactly when face is not a face of k
}

IntMat boundaryMatrix(const std::vector<std::vector<std::vector<int>>>& faces, int d) {
    if (d < 0 || std::size_t(d) + 1 >= faces.size()) throw CdxError("OutOfRange", "boundary degree");
    const auto& rows = faces[std::size_t(d)];     // (d-1)-faces
    const auto& cols = faces[std::size_t(d) + 1]; // d-faces
    std::map<std::vector<int>, int> rowIx;
    for (std::size_t i = 0; i < rows.size(); ++i) rowIx.emplace(rows[i], int(i));
    IntMat m(int(rows.size()), int(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto& f = cols[j];
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<int> sub;
            sub.reserve(f.size() - 1);
            for (std::size_t t = 0; t < f.size(); ++t)
                if (t != i) sub.push_back(f[t]);
            m.at(rowIx.at(sub), int(j)) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

GradedPoset facePoset(const SimplicialComplex& k) {
    auto faces = facesByDim(k);
    RawPoset raw;
    std::map<std::vector<int>, std::string> name;
    for (std::size_t dim1 = 1; dim1 < faces.size(); ++dim1) {
        for (auto& f : faces[dim1]) {
            std::string id;
            for (int v : f) {
                if (!id.empty()) id += "|";
                id += k.vnames[std::size_t(v)];
            }
            name.emplace(f, id);
            raw.elems.emplace_back(id, int(dim1));
            raw.n = std::max(raw.n, int(dim1));
            if (dim1 >= 2) {
                for (std::size_t i = 0; i < f.size(); ++i) {
                    std::vector<int> sub;
                    for (std::size_t t = 0; t < f.size(); ++t)
                        if (t != i) sub.push_back(f[t]);
                    raw.covers.emplace_back(id, name.at(sub));
                }
            }
        }
    }
    return validatePoset(raw);
}

} // namespace cdx
