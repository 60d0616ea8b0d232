#include "parthom/complex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace parthom {

struct SimplicialComplex::FaceIndex {
    // by_dim[d + 1] lists the d-faces in canonical order.
    std::vector<std::vector<PartialPartition>> by_dim;
    std::unordered_map<PartialPartition, int, PartialPartitionHash> position;
};

std::vector<PartialPartition> closure_union(const std::vector<PartialPartition>& faces) {
    std::unordered_set<PartialPartition, PartialPartitionHash> seen;
    for (const PartialPartition& f : faces)
        for (PartialPartition& sub : closure(f)) seen.insert(std::move(sub));
    return {seen.begin(), seen.end()};
}

SimplicialComplex SimplicialComplex::delta_n(GroundSet ground) {
    SimplicialComplex c;
    c.n_ = ground.n;
    c.full_dn_ = true;
    std::vector<int> elems;
    for (int e = 1; e <= ground.n; ++e) elems.push_back(e);
    c.facets_ = enumerate_set_partitions(elems);
    c.build_index();
    return c;
}

SimplicialComplex SimplicialComplex::generated_by(GroundSet ground,
                                                  const std::vector<PartialPartition>& faces) {
    SimplicialComplex c;
    c.n_ = ground.n;
    for (const PartialPartition& f : faces)
        if (ground.n >= 32 ? false : (f.support() >> ground.n) != 0)
            throw std::invalid_argument("face uses elements outside the ground set");

    std::vector<PartialPartition> all = closure_union(faces);
    std::sort(all.begin(), all.end());
    // Maximal faces: not strictly contained in any other face of the union.
    for (const PartialPartition& f : all) {
        bool maximal = true;
        for (const PartialPartition& g : all)
            if (f.block_count() < g.block_count() && f.subface_of(g)) {
                maximal = false;
                break;
            }
        if (maximal) c.facets_.push_back(f);
    }
    if (c.facets_.empty()) c.facets_.push_back(PartialPartition{});
    c.build_index();
    return c;
}

void SimplicialComplex::build_index() {
    auto idx = std::make_shared<FaceIndex>();

    std::vector<PartialPartition> all;
    if (full_dn_) {
        all = enumerate_partial_partitions(GroundSet(n_));
    } else {
        all = closure_union(facets_);
    }
    int dim = -1;
    for (const PartialPartition& f : all) dim = std::max(dim, f.dimension());
    idx->by_dim.resize(static_cast<std::size_t>(dim) + 2);
    for (PartialPartition& f : all)
        idx->by_dim[static_cast<std::size_t>(f.dimension()) + 1].push_back(std::move(f));
    for (auto& level : idx->by_dim) {
        std::sort(level.begin(), level.end());
        for (int i = 0; i < static_cast<int>(level.size()); ++i)
            idx->position.emplace(level[static_cast<std::size_t>(i)], i);
    }
    index_ = std::move(idx);
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const PartialPartition& f : facets_) d = std::max(d, f.dimension());
    return d;
}

const std::vector<PartialPartition>& SimplicialComplex::faces(int d) const {
    static const std::vector<PartialPartition> empty;
    if (d < -1 || d + 1 >= static_cast<int>(index_->by_dim.size())) return empty;
    return index_->by_dim[static_cast<std::size_t>(d) + 1];
}

Int SimplicialComplex::face_count(int d) const {
    return static_cast<int>(faces(d).size());
}

std::optional<int> SimplicialComplex::face_index(const PartialPartition& f) const {
    auto it = index_->position.find(f);
    if (it == index_->position.end()) return std::nullopt;
    return it->second;
}

bool SimplicialComplex::contains(const PartialPartition& f) const {
    return face_index(f).has_value();
}

Int SimplicialComplex::total_face_count() const {
    Int total = 0;
    for (const auto& level : index_->by_dim) total += static_cast<int>(level.size());
    return total;
}

std::vector<Count> SimplicialComplex::f_vector() const {
    std::vector<Count> out;
    out.reserve(index_->by_dim.size());
    for (const auto& level : index_->by_dim) out.emplace_back(static_cast<int>(level.size()));
    return out;
}

bool SimplicialComplex::is_pure_of_dim(int d) const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const PartialPartition& f) { return f.dimension() == d; });
}

int SimplicialComplex::component_count() const {
    const auto& vertices = faces(0);
    const int nv = static_cast<int>(vertices.size());
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const PartialPartition& e : faces(1)) {
        auto a = face_index(e.without(1)), b = face_index(e.without(0));
        int ra = find(*a), rb = find(*b);
        if (ra != rb) parent[static_cast<std::size_t>(ra)] = rb;
    }
    int components = 0;
    for (int v = 0; v < nv; ++v)
        if (find(v) == v) ++components;
    return components;
}

} // namespace parthom
