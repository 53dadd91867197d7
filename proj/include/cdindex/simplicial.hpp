#ifndef CDINDEX_SIMPLICIAL_HPP
#define CDINDEX_SIMPLICIAL_HPP

#include <string>
#include <vector>

#include "cdindex/matrix.hpp"
#include "cdindex/poset.hpp"

namespace cdx {

/* Faces are all subsets of facets, the empty set included.  Two degenerate
 * shapes are distinguished: the void complex (no facets, no faces at all)
 * and the complex whose only face is the empty set (facets = {{}}). */
struct SimplicialComplex {
    std::vector<std::string> vnames;
    std::vector<std::vector<int>> facets; // sorted vertex indices, no facet inside another

    bool isVoid() const { return facets.empty(); }
    /* -1 for the empty-face-only complex; meaningless when void. */
    int dim() const;
};

/* Normalizes: sorts each face, drops duplicates and dominated faces. */
SimplicialComplex makeComplex(std::vector<std::string> vnames, std::vector<std::vector<int>> faces);

/* Vertices are the elements of P minus 0-hat, facets its maximal chains. */
SimplicialComplex orderComplex(const GradedPoset& p);

/* faces[d+1] = all faces of dimension d, each sorted, list sorted; index 0
 * holds the empty face (absent when void). */
std::vector<std::vector<std::vector<int>>> facesByDim(const SimplicialComplex& k);

/* (f_{-1}, f_0, ..., f_dim) with f_{-1} = 1. */
std::vector<long long> fVector(const SimplicialComplex& k);

/* lk(face) = {tau : tau disjoint from face, tau union face a face}; vertex
 * names are inherited. */
SimplicialComplex linkOfFace(const SimplicialComplex& k, const std::vector<int>& face);

/* Augmented boundary from d-faces to (d-1)-faces with alternating signs;
 * d = 0 gives the all-ones row onto the empty face. */
IntMat boundaryMatrix(const std::vector<std::vector<std::vector<int>>>& faces, int d);

/* Elements are the nonempty faces ranked by cardinality; ids join vertex
 * names with '|'. */
GradedPoset facePoset(const SimplicialComplex& k);

} // namespace cdx

#endif
