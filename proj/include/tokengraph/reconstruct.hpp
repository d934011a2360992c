#ifndef TOKENGRAPH_RECONSTRUCT_HPP
#define TOKENGRAPH_RECONSTRUCT_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "tokengraph/graph.hpp"
#include "tokengraph/ladders.hpp"
#include "tokengraph/star.hpp"

namespace tokengraph {

enum class FactorClassId { kEdge, kTriangle, kStar3a, kStar3b, kStar3c, kOther };

const char* factor_class_name(FactorClassId c);

struct FactorInfo {
    FactorClassId cls = FactorClassId::kEdge;
    Graph h;                            // H_i
    Graph j;                            // the reconstructed J_i
    std::optional<StarParameters> star;  // (m, l) when H_i is a star token graph
    int l = 1, l_bar = 1;               // the two candidate token counts
    // per H_i vertex: the token set in J_i under psi_i (bitmask over V(J_i));
    // psi_bar is the complement except for single-edge factors.
    std::vector<std::uint64_t> psi;
};

struct ProductDecomposition {
    int r = 0;
    int seed_vertex = -1;
    std::vector<int> seed_classes;           // ladder classes of e_1..e_r
    std::vector<int> h_vertices;             // F vertices of H, insertion order
    std::vector<int> h_pos;                  // per F vertex: index into h_vertices, or -1
    std::vector<std::vector<int>> pi;        // per h position: factor coordinates
    std::vector<char> h_edge;                // per F edge id
    std::vector<Graph> factors;              // H_1..H_r

    bool in_h(int v) const { return h_pos[v] >= 0; }
};

struct CrossClassLabel {
    int cls = -1;       // ladder class
    int fi = -1, fj = -1;  // idx, fi < fj
    std::optional<int> endpoint_i, endpoint_j;  // vertices of J_fi / J_fj
};

struct CrossEdgeRecord {
    Edge e;             // e.u in H
    int cls = -1;
    int fi = -1, fj = -1;
    std::optional<int> endpoint_i, endpoint_j;
    bool forward = false;  // the (e, fi->fj) tuple lies in the forward set
};

struct ReconstructionResult {
    Graph j_forward, j_backward;
    Isomorphism swap;     // isomorphism from j_forward to j_backward
    int token_count = 0;  // sum of l_i; the complementary reading uses |J| - token_count
    std::vector<FactorInfo> factors;
    std::vector<int> factor_offset;  // vertex offset of each J_i inside j_forward
    std::vector<CrossEdgeRecord> cross_edges;
    ProductDecomposition decomposition;
};

// Full pipeline on a connected graph promised isomorphic to F_k(G) for a
// connected (C4,diamond)-free G. Structure errors identify the violated
// stage when the promise fails.
ReconstructionResult reconstruct(const Graph& f);

// Staged driver; exposed so tests can exercise the pipeline piecewise.
class Reconstructor {
public:
    explicit Reconstructor(const Graph& f);

    void product_subgraph();  // Initialize + the Extend loop
    void classify();
    void label_cross_edges();
    ReconstructionResult assemble();

    ReconstructionResult run();

    const Graph& f() const { return f_; }
    const LadderClasses& ladders() const { return classes_; }
    const LocalView& view(int a) const { return views_[a]; }
    const ProductDecomposition& decomposition() const { return dec_; }
    const std::vector<FactorInfo>& factors() const { return factors_; }
    const std::vector<CrossClassLabel>& cross_class_labels() const { return labels_; }
    std::pair<int, int> idx_of(const Edge& e) const;

private:
    void compute_views();
    void initialize();
    void extend(int i);
    void validate_product() const;
    bool separates_3a() const;

    // endpoint machinery
    std::vector<int> move_slice(int a, int i) const;
    std::pair<std::vector<int>, std::vector<int>> fix_nfix(int a, int i, int cls) const;
    std::optional<int> boundary_endpoint(int a, int i, int cls) const;
    bool occ(int a, int i, int p) const;
    int token_pos(int a, int i) const;  // for l=1 views
    int probe_vertex(int base, int i, int ci, int j, int cj) const;
    void resolve_endpoints();
    bool probe_pair(int pair_id, int delta, bool commit);

    // orientation
    void orient();

    const Graph f_;
    LadderClasses classes_;
    std::vector<LocalView> views_;
    // per vertex: (class, neighbor) sorted by class
    std::vector<std::vector<std::pair<int, int>>> class_nbrs_;
    int class_nbr(int v, int cls) const;           // -1 when absent
    bool incident_to_class(int v, int cls) const;

    ProductDecomposition dec_;
    std::vector<int> factor_sizes_;                       // grown by Extend
    std::vector<std::set<std::pair<int, int>>> factor_edges_;
    std::unordered_map<std::string, int> pi_index_;  // encoded pi tuple -> F vertex
    std::string encode_pi(const std::vector<int>& t) const;
    std::vector<FactorInfo> factors_;
    std::vector<std::vector<int>> psi_inv_;  // per factor (l=1): J-vertex -> H_i vertex

    // cross-edge bookkeeping
    struct CrossEdge {
        int eid;
        int a, b;  // a in H
        int cls;
    };
    std::vector<CrossEdge> cross_;
    std::vector<CrossClassLabel> labels_;            // per cross class, dense
    std::vector<int> label_of_class_;                // class id -> index into labels_, or -1
    struct Stuck {
        int leaf = -1, nbr = -1;
    };
    std::vector<std::array<Stuck, 2>> stuck_;        // parallel to labels_

    // parity over factors: flip_i xor flip_j
    struct Parity {
        std::vector<int> parent, rank_, par;
        void init(int n);
        std::pair<int, int> find(int x);
        bool unite(int a, int b, int parity);  // false on conflict
        std::optional<int> delta(int a, int b);
    } parity_;

    std::vector<char> edge_forward_;  // per cross_ index: tuple direction before half-selection
    std::vector<int> pair_of_cross_;  // per cross_ index: pair id
    std::vector<std::pair<int, int>> pairs_;  // distinct (fi,fj)
    std::vector<int> pair_var_;               // chosen half per pair

    bool staged_views_ = false, staged_product_ = false, staged_classified_ = false, staged_labeled_ = false;
};

}  // namespace tokengraph

#endif
