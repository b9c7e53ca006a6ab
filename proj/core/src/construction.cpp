#include "fsgraph/construction.hpp"

#include <algorithm>
#include <sstream>

namespace fsg {

namespace {

constexpr int kCycleLen = 16;
constexpr int kSlotNext = 4;    // shared vertex with the next layer
constexpr int kSlotShared = 8;  // v^l
constexpr int kSlotPrev = 12;   // shared vertex with the previous layer / layer-1 knob start
constexpr int kMerge = 31;      // lower-level segments consumed per segment

int mod16(int i) { return ((i % 16) + 16) % 16; }

}  // namespace

LayeredConstruction build_construction(int L) {
    if (L < 1) throw input_error("build_construction requires L >= 1");
    LayeredConstruction lc;
    lc.L = L;
    int n = 58 * L + 2;
    lc.layers.resize(L);

    // X: per layer, cycle a, path a, cycle b, path b; new ids in slot order.
    std::vector<Edge> xedges;
    int next_id = 0;
    for (int l = 1; l <= L; ++l) {
        LayerNames& ly = lc.layers[l - 1];
        ly.cycle_a.assign(kCycleLen, -1);
        ly.cycle_b.assign(kCycleLen, -1);
        if (l >= 2) {
            ly.cycle_a[kSlotPrev] = lc.layers[l - 2].cycle_a[kSlotNext];
            ly.cycle_b[kSlotPrev] = lc.layers[l - 2].cycle_b[kSlotNext];
        }
        for (int i = 0; i < kCycleLen; ++i)
            if (ly.cycle_a[i] < 0) ly.cycle_a[i] = next_id++;
        ly.path_a.assign(16, -1);
        ly.path_a[0] = ly.cycle_a[0];
        for (int i = 1; i < 16; ++i) ly.path_a[i] = next_id++;
        ly.cycle_b[kSlotShared] = ly.cycle_a[kSlotShared];
        for (int i = 0; i < kCycleLen; ++i)
            if (ly.cycle_b[i] < 0) ly.cycle_b[i] = next_id++;
        ly.path_b.assign(15, -1);
        ly.path_b[0] = ly.cycle_b[0];
        for (int i = 1; i < 15; ++i) ly.path_b[i] = next_id++;

        for (int i = 0; i < kCycleLen; ++i) {
            xedges.push_back({ly.cycle_a[i], ly.cycle_a[(i + 1) % kCycleLen]});
            xedges.push_back({ly.cycle_b[i], ly.cycle_b[(i + 1) % kCycleLen]});
        }
        for (std::size_t i = 0; i + 1 < ly.path_a.size(); ++i)
            xedges.push_back({ly.path_a[i], ly.path_a[i + 1]});
        for (std::size_t i = 0; i + 1 < ly.path_b.size(); ++i)
            xedges.push_back({ly.path_b[i], ly.path_b[i + 1]});
    }
    if (next_id != n) throw input_error("internal: X vertex count mismatch");
    lc.X = SimpleGraph(n, xedges);

    // Y: stars, complete bipartite blocks, knob attachments. Element 0 of each
    // partite set doubles as the next layer's knob.
    std::vector<Edge> yedges;
    int ynext = 0;
    for (int l = 1; l <= L; ++l) {
        LayerNames& ly = lc.layers[l - 1];
        ly.knob_a = (l == 1) ? ynext++ : lc.layers[l - 2].bip_a[0];
        for (int i = 0; i < 14; ++i) ly.leaves_a.push_back(ynext++);
        ly.knob_b = (l == 1) ? ynext++ : lc.layers[l - 2].bip_b[0];
        for (int i = 0; i < 14; ++i) ly.leaves_b.push_back(ynext++);
        for (int i = 0; i < 15; ++i) ly.bip_a.push_back(ynext++);
        for (int i = 0; i < 15; ++i) ly.bip_b.push_back(ynext++);

        for (int leaf : ly.leaves_a) yedges.push_back({ly.knob_a, leaf});
        for (int leaf : ly.leaves_b) yedges.push_back({ly.knob_b, leaf});
        for (int u : ly.bip_a)
            for (int v : ly.bip_b) yedges.push_back({u, v});
        for (int u : ly.bip_a) {
            yedges.push_back({ly.knob_a, u});
            yedges.push_back({ly.knob_b, u});
        }
        for (int v : ly.bip_b) {
            yedges.push_back({ly.knob_a, v});
            yedges.push_back({ly.knob_b, v});
        }
    }
    if (ynext != n) throw input_error("internal: Y vertex count mismatch");
    lc.Y = SimpleGraph(n, yedges);

    // sigma_s: K_a^l right-to-left on P_a^l minus the junction (the next knob
    // on the leftmost vertex), K_b^l along P_b^l (the next knob on v_b^l),
    // layer-1 knobs on the upper-arc middles, leaves in id order on the free
    // cycle slots.
    std::vector<uint16_t> map(n, 0xffff);
    auto place = [&](int x, int y) {
        if (map[x] != 0xffff) throw input_error("internal: sigma_s double placement");
        map[x] = static_cast<uint16_t>(y);
    };
    for (int l = 1; l <= L; ++l) {
        LayerNames& ly = lc.layers[l - 1];
        for (int i = 0; i < 15; ++i) place(ly.path_a[15 - i], ly.bip_a[i]);
        for (int i = 0; i < 15; ++i) place(ly.path_b[i], ly.bip_b[i]);
        if (l == 1) {
            place(ly.cycle_a[kSlotPrev], ly.knob_a);
            place(ly.cycle_b[kSlotPrev], ly.knob_b);
        }
        int li = 0;
        for (int i = 0; i < kCycleLen; ++i) {
            int v = ly.cycle_a[i];
            if (i == kSlotShared || map[v] != 0xffff) continue;
            place(v, ly.leaves_a[li++]);
        }
        if (li != 14) throw input_error("internal: sigma_s leaf placement (a)");
        li = 0;
        for (int i = 0; i < kCycleLen; ++i) {
            int v = ly.cycle_b[i];
            if (map[v] != 0xffff) continue;
            place(v, ly.leaves_b[li++]);
        }
        if (li != 14) throw input_error("internal: sigma_s leaf placement (b)");
    }
    lc.sigma_s = Configuration(map);
    if (!lc.sigma_s.is_permutation()) throw input_error("internal: sigma_s not a bijection");

    // membership masks
    auto mask_of = [&](const std::vector<int>& verts) {
        std::vector<bool> m(n, false);
        for (int v : verts) m[v] = true;
        return m;
    };
    for (int l = 1; l <= L; ++l) {
        LayerNames& ly = lc.layers[l - 1];
        lc.in_cycle_a.push_back(mask_of(ly.cycle_a));
        lc.in_cycle_b.push_back(mask_of(ly.cycle_b));
        lc.in_path_a.push_back(mask_of(ly.path_a));
        lc.in_path_b.push_back(mask_of(ly.path_b));
        std::vector<bool> layer_mask(n, false);
        for (const auto* vs : {&ly.cycle_a, &ly.cycle_b, &ly.path_a, &ly.path_b})
            for (int v : *vs) layer_mask[v] = true;
        lc.in_layer.push_back(std::move(layer_mask));
        lc.is_leaf_a.push_back(mask_of(ly.leaves_a));
        lc.is_leaf_b.push_back(mask_of(ly.leaves_b));
        std::vector<bool> bip_mask(n, false);
        for (int v : ly.bip_a) bip_mask[v] = true;
        for (int v : ly.bip_b) bip_mask[v] = true;
        lc.in_bip.push_back(std::move(bip_mask));
    }
    lc.sigma_s_pos = lc.sigma_s.inverse();
    lc.path_slot.assign(n, -1);
    for (const auto& ly : lc.layers) {
        for (std::size_t i = 0; i < ly.path_a.size(); ++i) lc.path_slot[ly.path_a[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < ly.path_b.size(); ++i) lc.path_slot[ly.path_b[i]] = static_cast<int>(i);
    }
    return lc;
}

std::vector<int> boundary(const LayeredConstruction& lc, Side side, int layer) {
    if (layer < 1 || layer > lc.L) throw input_error("boundary: layer out of range");
    const LayerNames& ly = lc.layers[layer - 1];
    std::vector<int> out;
    out.push_back(side == Side::a ? ly.v_a() : ly.v_b());
    if (layer > 1) out.push_back(side == Side::a ? ly.v_a_prev() : ly.v_b_prev());
    if (layer < lc.L) out.push_back(side == Side::a ? ly.v_a_next() : ly.v_b_next());
    out.push_back(ly.v_shared());
    return out;
}

uint64_t lower_bound_for(int L) {
    if (L < 1) throw input_error("lower_bound_for requires L >= 1");
    if (L > 14) throw input_error("lower_bound_for: 25^(L-1) exceeds 64 bits");
    uint64_t v = 1;
    for (int i = 1; i < L; ++i) v *= 25;
    return v;
}

PaddedConstruction padded(int L, int n) {
    auto lc = build_construction(L);
    int base = lc.X.n();
    if (n < base) {
        std::ostringstream os;
        os << "padded: n=" << n << " smaller than construction size " << base;
        throw input_error(os.str());
    }
    PaddedConstruction out{SimpleGraph(n, lc.X.edges()), SimpleGraph(n, lc.Y.edges()), {}};
    std::vector<uint16_t> map = lc.sigma_s.map;
    for (int v = base; v < n; ++v) map.push_back(static_cast<uint16_t>(v));
    out.sigma = Configuration(std::move(map));
    return out;
}

// --- checkers ----------------------------------------------------------------

namespace {

bool rule_of_two_pos(const LayeredConstruction& lc, const std::vector<uint16_t>& pos) {
    for (int l = 0; l < lc.L; ++l) {
        for (int leaf : lc.layers[l].leaves_a)
            if (!lc.in_cycle_a[l][pos[leaf]]) return false;
        for (int leaf : lc.layers[l].leaves_b)
            if (!lc.in_cycle_b[l][pos[leaf]]) return false;
    }
    return true;
}

}  // namespace

bool check_rule_of_two(const LayeredConstruction& lc, const Configuration& sigma) {
    return rule_of_two_pos(lc, sigma.inverse());
}

namespace {

LayerIndependenceReport layer_independence_pos(const LayeredConstruction& lc,
                                               const std::vector<uint16_t>& pos) {
    LayerIndependenceReport rep;
    const auto& l1 = lc.layers[0];
    int pa1 = pos[l1.knob_a], pb1 = pos[l1.knob_b];
    rep.knobs_layer1 = (lc.in_cycle_a[0][pa1] || lc.in_path_a[0][pa1]) &&
                       (lc.in_cycle_b[0][pb1] || lc.in_path_b[0][pb1]);

    rep.knobs_adjacent = true;
    for (int l = 2; l <= lc.L; ++l) {
        const auto& ly = lc.layers[l - 1];
        for (int knob : {ly.knob_a, ly.knob_b}) {
            int x = pos[knob];
            if (!lc.in_layer[l - 2][x] && !lc.in_layer[l - 1][x]) rep.knobs_adjacent = false;
        }
    }

    rep.bip_on_layer = true;
    for (int l = 1; l <= lc.L; ++l) {
        const auto& ly = lc.layers[l - 1];
        for (const auto* part : {&ly.bip_a, &ly.bip_b}) {
            for (std::size_t i = 0; i < part->size(); ++i) {
                if (l < lc.L && i == 0) continue;  // element 0 is the next layer's knob
                if (!lc.in_layer[l - 1][pos[(*part)[i]]]) rep.bip_on_layer = false;
            }
        }
    }

    rep.at_most_one_off_paths = true;
    for (int l = 1; l <= lc.L; ++l) {
        const auto& ly = lc.layers[l - 1];
        int off = 0;
        for (const auto* part : {&ly.bip_a, &ly.bip_b})
            for (int mu : *part) {
                int x = pos[mu];
                if (!lc.in_path_a[l - 1][x] && !lc.in_path_b[l - 1][x]) ++off;
            }
        if (off > 1) rep.at_most_one_off_paths = false;
    }
    return rep;
}

bool path_images_pos(const LayeredConstruction& lc, const std::vector<uint16_t>& cur,
                     const std::vector<uint16_t>& pos) {
    for (int l = 1; l <= lc.L; ++l) {
        const auto& ly = lc.layers[l - 1];
        bool all_on_paths = true;
        for (const auto* part : {&ly.bip_a, &ly.bip_b})
            for (int mu : *part) {
                int x = pos[mu];
                if (!lc.in_path_a[l - 1][x] && !lc.in_path_b[l - 1][x]) all_on_paths = false;
            }
        auto knob_on = [&](bool side_a_path) {
            for (int knob : {ly.knob_a, ly.knob_b}) {
                int x = pos[knob];
                if (side_a_path && lc.in_path_a[l - 1][x] && x != ly.v_a()) return true;
                if (!side_a_path && lc.in_path_b[l - 1][x] && x != ly.v_b()) return true;
            }
            return false;
        };
        bool va_in_k = lc.in_bip[l - 1][cur[ly.v_a()]];
        bool vb_in_k = lc.in_bip[l - 1][cur[ly.v_b()]];
        if (all_on_paths) {
            if (va_in_k && vb_in_k) {
                int count = 0;
                for (int knob : {ly.knob_a, ly.knob_b}) {
                    int x = pos[knob];
                    if ((lc.in_path_a[l - 1][x] && x != ly.v_a()) ||
                        (lc.in_path_b[l - 1][x] && x != ly.v_b()))
                        ++count;
                }
                if (count != 1) return false;
            }
        } else {
            if (va_in_k && !knob_on(true)) return false;
            if (vb_in_k && !knob_on(false)) return false;
        }
    }
    return true;
}

// tri-state left relation from position tables: -1 undefined, 0 false, 1 true
int left_pos(const LayeredConstruction& lc, const std::vector<uint16_t>& pos, int layer,
             int mu1, int mu2) {
    int x1 = pos[mu1], x2 = pos[mu2];
    bool a1 = lc.in_path_a[layer - 1][x1], b1 = lc.in_path_b[layer - 1][x1];
    bool a2 = lc.in_path_a[layer - 1][x2], b2 = lc.in_path_b[layer - 1][x2];
    if (!(a1 || b1) || !(a2 || b2)) return -1;
    if (a1 && a2) {
        // distance to v_a^l is the path slot; farther from the junction is left
        return lc.path_slot[x2] < lc.path_slot[x1] ? 1 : 0;
    }
    if (b1 && b2) return lc.path_slot[x1] < lc.path_slot[x2] ? 1 : 0;
    return (a1 && b2) ? 1 : 0;
}

bool order_invariance_pos(const LayeredConstruction& lc, const std::vector<uint16_t>& pos) {
    for (int l = 1; l <= lc.L; ++l) {
        const auto& ly = lc.layers[l - 1];
        for (const auto* part : {&ly.bip_a, &ly.bip_b}) {
            for (std::size_t i = 0; i < part->size(); ++i)
                for (std::size_t j = i + 1; j < part->size(); ++j) {
                    int now = left_pos(lc, pos, l, (*part)[i], (*part)[j]);
                    if (now < 0) continue;
                    int at_start = left_pos(lc, lc.sigma_s_pos, l, (*part)[i], (*part)[j]);
                    if (now != at_start) return false;
                }
        }
    }
    return true;
}

bool knob_extract_pos(const LayeredConstruction& lc, const std::vector<uint16_t>& pos) {
    for (int l = 1; l < lc.L; ++l) {
        const auto& ly = lc.layers[l - 1];
        auto on_paths = [&](int mu) {
            int x = pos[mu];
            return lc.in_path_a[l - 1][x] || lc.in_path_b[l - 1][x];
        };
        if (!on_paths(ly.bip_a[0])) {
            for (int mu : ly.bip_b)
                if (!lc.in_path_a[l - 1][pos[mu]]) return false;
        }
        if (!on_paths(ly.bip_b[0])) {
            for (int mu : ly.bip_a)
                if (!lc.in_path_a[l - 1][pos[mu]]) return false;
        }
    }
    return true;
}

}  // namespace

LayerIndependenceReport check_layer_independence(const LayeredConstruction& lc,
                                                 const Configuration& sigma) {
    return layer_independence_pos(lc, sigma.inverse());
}

bool check_path_images(const LayeredConstruction& lc, const Configuration& sigma) {
    return path_images_pos(lc, sigma.map, sigma.inverse());
}

std::optional<bool> is_left(const LayeredConstruction& lc, const Configuration& sigma,
                            int layer, int mu1, int mu2) {
    if (layer < 1 || layer > lc.L) throw input_error("is_left: layer out of range");
    int v = left_pos(lc, sigma.inverse(), layer, mu1, mu2);
    if (v < 0) return std::nullopt;
    return v == 1;
}

bool check_order_invariance(const LayeredConstruction& lc, const Configuration& sigma) {
    return order_invariance_pos(lc, sigma.inverse());
}

bool check_knob_extract(const LayeredConstruction& lc, const Configuration& sigma) {
    return knob_extract_pos(lc, sigma.inverse());
}

InvariantReport check_invariants_pos(const LayeredConstruction& lc,
                                     const std::vector<uint16_t>& cur,
                                     const std::vector<uint16_t>& pos) {
    InvariantReport rep;
    rep.rule_of_two = rule_of_two_pos(lc, pos);
    rep.layer_independence = layer_independence_pos(lc, pos).all();
    rep.path_images = path_images_pos(lc, cur, pos);
    rep.order_invariance = order_invariance_pos(lc, pos);
    rep.knob_extract = knob_extract_pos(lc, pos);
    return rep;
}

namespace {

bool is_extraction_pos(const LayeredConstruction& lc, const std::vector<uint16_t>& sigma_pos,
                       const std::vector<uint16_t>& tau_pos, int layer) {
    const auto& ly = lc.layers[layer - 1];
    const auto& pa = lc.in_path_a[layer - 1];
    auto all_in = [&](const std::vector<int>& part, const std::vector<uint16_t>& pos) {
        for (int mu : part)
            if (!pa[pos[mu]]) return false;
        return true;
    };
    auto none_in = [&](const std::vector<int>& part, const std::vector<uint16_t>& pos) {
        for (int mu : part)
            if (pa[pos[mu]]) return false;
        return true;
    };
    bool kind1 = all_in(ly.bip_a, sigma_pos) && none_in(ly.bip_a, tau_pos) &&
                 all_in(ly.bip_b, tau_pos);
    bool kind2 = all_in(ly.bip_b, sigma_pos) && none_in(ly.bip_b, tau_pos) &&
                 all_in(ly.bip_a, tau_pos);
    return kind1 || kind2;
}

}  // namespace

bool is_extraction(const LayeredConstruction& lc, const Configuration& sigma,
                   const Configuration& tau, int layer) {
    if (layer < 1 || layer > lc.L) throw input_error("is_extraction: layer out of range");
    return is_extraction_pos(lc, sigma.inverse(), tau.inverse(), layer);
}

int count_extraction_chain(const LayeredConstruction& lc, const SwapSequence& seq, int layer) {
    std::vector<uint16_t> cur = seq.start.map;
    std::vector<uint16_t> pos = seq.start.inverse();
    std::vector<uint16_t> checkpoint_pos = pos;
    int count = 0;
    for (auto [a, b] : seq.swaps) {
        std::swap(pos[cur[a]], pos[cur[b]]);
        std::swap(cur[a], cur[b]);
        if (is_extraction_pos(lc, checkpoint_pos, pos, layer)) {
            ++count;
            checkpoint_pos = pos;
        }
    }
    return count;
}

// --- program generation -------------------------------------------------------

namespace {

// Emits friendly swaps for extraction programs. Rotations at layer l fire a
// per-loop hook; the handler for layer l+1 reacts when its knob crosses the
// shared vertex, splicing in the layer-(l+1) moves. Layer-m segment counters
// cascade: 31 segments at layer m complete one segment at layer m+1.
class ProgramEmitter {
public:
    ProgramEmitter(const LayeredConstruction& lc, int target, std::size_t max_swaps,
                   std::function<void(std::size_t, Edge)> sink, std::vector<RotationSpan>* spans)
        : lc_(lc),
          target_(target),
          max_swaps_(max_swaps),
          sink_(std::move(sink)),
          spans_(spans),
          cur_(lc.sigma_s.map),
          pos_(lc.sigma_s.inverse()),
          segments_done_(target + 2, 0),
          hook_fired_(target + 2, false),
          segment_start_pos_(target + 2, pos_) {}

    std::vector<std::size_t> run(int eta) {
        std::vector<std::size_t> checkpoints{0};
        checkpoints_ = &checkpoints;
        uint64_t segments = eta;
        for (int l = 1; l < target_; ++l) segments *= kMerge;
        for (uint64_t s = 0; s < segments; ++s) basis_segment();
        return checkpoints;
    }

    std::size_t count() const { return count_; }
    Configuration configuration() const { return Configuration(cur_); }

private:
    const LayeredConstruction& lc_;
    int target_;
    std::size_t max_swaps_;
    std::function<void(std::size_t, Edge)> sink_;
    std::vector<RotationSpan>* spans_;
    std::vector<uint16_t> cur_, pos_;
    std::vector<uint64_t> segments_done_;
    std::vector<bool> hook_fired_;
    std::vector<std::vector<uint16_t>> segment_start_pos_;
    std::vector<std::size_t>* checkpoints_ = nullptr;
    std::size_t count_ = 0;

    const LayerNames& layer(int l) const { return lc_.layers[l - 1]; }

    void emit(int a, int b) {
        if (!lc_.X.has_edge(a, b) || !lc_.Y.has_edge(cur_[a], cur_[b]))
            throw input_error("internal: generated swap is not friendly");
        if (count_ >= max_swaps_) {
            std::ostringstream os;
            os << "program budget exceeded after " << count_ << " swaps";
            throw budget_error(os.str());
        }
        if (sink_) sink_(count_, {std::min(a, b), std::max(a, b)});
        std::swap(pos_[cur_[a]], pos_[cur_[b]]);
        std::swap(cur_[a], cur_[b]);
        ++count_;
    }

    void basis_segment() {
        for (int i = 0; i < 15; ++i) basis_iteration();
        complete_segment(1);
    }

    void basis_iteration() {
        const auto& ly = layer(1);
        int mu = cur_[ly.v_b()];
        rotate(Side::b, 1, mu, ly.v_shared());
        rotate(Side::a, 1, mu, ly.v_a());
        push(Side::a, 1);
        int mu2 = cur_[ly.v_a()];
        rotate(Side::a, 1, mu2, ly.v_shared());
        rotate(Side::b, 1, mu2, ly.v_b());
        push(Side::b, 1);
    }

    void complete_segment(int level) {
        if (target_ >= level &&
            !is_extraction_pos(lc_, segment_start_pos_[level], pos_, level))
            throw input_error("internal: segment endpoint is not an extraction");
        if (level + 1 <= target_ && !hook_fired_[level + 1])
            throw input_error("internal: segment completed without firing its hook");
        segment_start_pos_[level] = pos_;
        ++segments_done_[level];
        if (level + 1 <= target_) hook_fired_[level + 1] = false;
        if (level == target_) {
            checkpoints_->push_back(count_);
        } else if (segments_done_[level] % kMerge == 0) {
            complete_segment(level + 1);
        }
    }

    // Swap the junction occupant outward along the path while friendly.
    void push(Side side, int l) {
        const auto& p = (side == Side::a) ? layer(l).path_a : layer(l).path_b;
        int mu = cur_[p[0]];
        for (std::size_t k = 1; k < p.size() && lc_.Y.has_edge(mu, cur_[p[k]]); ++k)
            emit(p[k - 1], p[k]);
    }

    // Rotate the knob around its cycle until `companion` reaches `target`,
    // routing the companion along the arc that avoids the knob's vertex.
    void rotate(Side side, int l, int companion, int target) {
        const auto& ly = layer(l);
        const auto& cyc = (side == Side::a) ? ly.cycle_a : ly.cycle_b;
        int knob = (side == Side::a) ? ly.knob_a : ly.knob_b;
        const auto& leaf_mask = (side == Side::a) ? lc_.is_leaf_a[l - 1] : lc_.is_leaf_b[l - 1];

        int si = -1, ui = -1, ti = -1;
        for (int i = 0; i < kCycleLen; ++i) {
            int occupant = cur_[cyc[i]];
            if (occupant == knob) si = i;
            if (occupant == companion) ui = i;
            if (cyc[i] == target) ti = i;
            if (!(occupant == knob || occupant == companion || leaf_mask[occupant])) {
                std::ostringstream os;
                os << "rotation occupancy violated on layer " << l << " side "
                   << (side == Side::a ? 'a' : 'b');
                throw input_error(os.str());
            }
        }
        if (si < 0 || ui < 0 || ti < 0)
            throw input_error("rotation requires knob, companion and target on the cycle");
        if (ui == ti) return;

        int dir = +1;
        for (int i = mod16(ui + 1);; i = mod16(i + 1)) {
            if (i == si) {
                dir = -1;
                break;
            }
            if (i == ti) break;
        }
        int loops = mod16(dir * (ti - ui));
        int knob_dir = -dir;
        std::size_t span_begin = count_;
        for (int loop = 0; loop < loops; ++loop) {
            for (int k = 1; k <= kCycleLen; ++k)
                emit(cyc[mod16(si + knob_dir * (k - 1))], cyc[mod16(si + knob_dir * k)]);
            std::size_t before_hooks = count_;
            fire_hook(side, l, companion);
            if (count_ != before_hooks) {
                record_span(side, l, companion, span_begin, before_hooks);
                span_begin = count_;
            }
        }
        record_span(side, l, companion, span_begin, count_);
    }

    void record_span(Side side, int l, int companion, std::size_t begin, std::size_t end) {
        if (spans_ && end > begin) spans_->push_back({l, side, companion, begin, end});
    }

    void fire_hook(Side side, int l, int companion) {
        int t = l + 1;
        if (t > target_ || hook_fired_[t]) return;
        int j = static_cast<int>(segments_done_[l] % kMerge) + 1;
        Side want = (j % 2 == 1) ? Side::b : Side::a;
        if (side != want) return;
        const auto& ly = layer(t);
        int knob_t = (want == Side::a) ? ly.knob_a : ly.knob_b;
        if (companion != knob_t) return;
        int hook_vertex = (want == Side::a) ? layer(l).cycle_a[kSlotNext]
                                            : layer(l).cycle_b[kSlotNext];
        if (pos_[knob_t] != hook_vertex) return;
        hook_fired_[t] = true;
        inner_action(t, j);
    }

    // The j-th splice of a layer-t segment: j=1 brings the v_b occupant to the
    // shared vertex; even j pushes it through P_a and extracts the next
    // element; odd j pushes through P_b; j=31 pushes without extracting.
    void inner_action(int t, int j) {
        const auto& ly = layer(t);
        if (j == 1) {
            rotate(Side::b, t, cur_[ly.v_b()], ly.v_shared());
        } else if (j % 2 == 0) {
            rotate(Side::a, t, cur_[ly.v_shared()], ly.v_a());
            push(Side::a, t);
            rotate(Side::a, t, cur_[ly.v_a()], ly.v_shared());
        } else if (j == kMerge) {
            rotate(Side::b, t, cur_[ly.v_shared()], ly.v_b());
            push(Side::b, t);
        } else {
            rotate(Side::b, t, cur_[ly.v_shared()], ly.v_b());
            push(Side::b, t);
            rotate(Side::b, t, cur_[ly.v_b()], ly.v_shared());
        }
    }
};

}  // namespace

SwapSequence knob_rotation(const LayeredConstruction& lc, const Configuration& sigma,
                           Side side, int layer, int companion, int loops, int direction) {
    if (layer < 1 || layer > lc.L) throw input_error("knob_rotation: layer out of range");
    if (direction != 1 && direction != -1) throw input_error("knob_rotation: direction is +1 or -1");
    if (loops < 0) throw input_error("knob_rotation: loops must be nonnegative");
    const auto& ly = lc.layers[layer - 1];
    const auto& cyc = (side == Side::a) ? ly.cycle_a : ly.cycle_b;
    int knob = (side == Side::a) ? ly.knob_a : ly.knob_b;
    const auto& leaf_mask = (side == Side::a) ? lc.is_leaf_a[layer - 1] : lc.is_leaf_b[layer - 1];

    std::vector<uint16_t> cur = sigma.map;
    int si = -1;
    for (int i = 0; i < kCycleLen; ++i) {
        int occupant = cur[cyc[i]];
        if (occupant == knob) si = i;
        if (!(occupant == knob || occupant == companion || leaf_mask[occupant]))
            throw input_error("knob_rotation: cycle must hold the knob, its leaves and the companion");
    }
    if (si < 0) throw input_error("knob_rotation: knob is not on its cycle");
    bool companion_found = false;
    for (int i = 0; i < kCycleLen; ++i) companion_found |= cur[cyc[i]] == companion;
    if (!companion_found) throw input_error("knob_rotation: companion is not on the cycle");

    SwapSequence seq;
    seq.start = sigma;
    int knob_dir = -direction;
    for (int loop = 0; loop < loops; ++loop)
        for (int k = 1; k <= kCycleLen; ++k) {
            int a = cyc[mod16(si + knob_dir * (k - 1))];
            int b = cyc[mod16(si + knob_dir * k)];
            if (!lc.Y.has_edge(cur[a], cur[b]))
                throw input_error("knob_rotation: unfriendly swap");
            seq.swaps.push_back({std::min(a, b), std::max(a, b)});
            std::swap(cur[a], cur[b]);
        }
    return seq;
}

ExtractionProgram l_extraction_program(const LayeredConstruction& lc, int level, int eta,
                                       const ProgramBudget& budget) {
    if (level < 1 || level > lc.L) throw input_error("l_extraction_program: level out of range");
    if (eta < 1) throw input_error("l_extraction_program: eta must be positive");
    ExtractionProgram prog;
    prog.level = level;
    prog.eta = eta;
    prog.program.start = lc.sigma_s;
    ProgramEmitter emitter(
        lc, level, budget.max_swaps,
        [&prog](std::size_t, Edge e) { prog.program.swaps.push_back(e); }, &prog.rotations);
    prog.checkpoints = emitter.run(eta);
    return prog;
}

ExtractionProgram one_layer_extraction(const LayeredConstruction& lc, int eta,
                                       const ProgramBudget& budget) {
    if (lc.L != 1) throw input_error("one_layer_extraction requires L = 1");
    return l_extraction_program(lc, 1, eta, budget);
}

std::vector<std::size_t> stream_l_extraction_program(
    const LayeredConstruction& lc, int level, int eta,
    const std::function<void(std::size_t, Edge)>& sink) {
    if (level < 1 || level > lc.L) throw input_error("stream program: level out of range");
    ProgramEmitter emitter(lc, level, SIZE_MAX, sink, nullptr);
    return emitter.run(eta);
}

Configuration sigma_f(const LayeredConstruction& lc, const ProgramBudget& budget) {
    ProgramEmitter emitter(lc, lc.L, budget.max_swaps, nullptr, nullptr);
    emitter.run(1);
    return emitter.configuration();
}

}  // namespace fsg
