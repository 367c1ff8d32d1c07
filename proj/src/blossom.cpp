// Copyright 2026 The colorsurg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "colorsurg/blossom.hpp"

#include <algorithm>
#include <stdexcept>

namespace colorsurg {

namespace {

class Matcher {
   public:
    Matcher(size_t n, const std::vector<WeightedEdge> &edges, bool maxcard)
        : n_(static_cast<long>(n)), edges_(edges), maxcard_(maxcard) {
        long ne = static_cast<long>(edges.size());
        int64_t maxw = 0;
        for (auto &e : edges_) {
            if (e.u == e.v || e.u >= n || e.v >= n) {
                throw std::invalid_argument("bad matching edge");
            }
            // Doubling keeps every dual update integral.
            e.weight *= 2;
            maxw = std::max(maxw, e.weight);
        }
        endpoint_.resize(2 * ne);
        for (long k = 0; k < ne; k++) {
            endpoint_[2 * k] = static_cast<long>(edges_[k].u);
            endpoint_[2 * k + 1] = static_cast<long>(edges_[k].v);
        }
        neighbend_.assign(n_, {});
        for (long k = 0; k < ne; k++) {
            neighbend_[edges_[k].u].push_back(2 * k + 1);
            neighbend_[edges_[k].v].push_back(2 * k);
        }
        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (long v = 0; v < n_; v++) {
            inblossom_[v] = v;
        }
        blossomparent_.assign(2 * n_, -1);
        blossomchilds_.assign(2 * n_, {});
        blossombase_.assign(2 * n_, -1);
        for (long v = 0; v < n_; v++) {
            blossombase_[v] = v;
        }
        blossomendps_.assign(2 * n_, {});
        bestedge_.assign(2 * n_, -1);
        blossombestedges_.assign(2 * n_, {});
        has_bestedges_.assign(2 * n_, false);
        for (long b = 2 * n_ - 1; b >= n_; b--) {
            unused_.push_back(b);
        }
        dualvar_.assign(2 * n_, 0);
        for (long v = 0; v < n_; v++) {
            dualvar_[v] = maxw;
        }
        allowedge_.assign(ne, false);
    }

    std::vector<long> run() {
        long ne = static_cast<long>(edges_.size());
        for (long t = 0; t < n_; t++) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (long b = n_; b < 2 * n_; b++) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = false;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();
            for (long v = 0; v < n_; v++) {
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
                    assign_label(v, 1, -1);
                }
            }
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    long v = queue_.back();
                    queue_.pop_back();
                    for (long p : neighbend_[v]) {
                        long k = p / 2;
                        long w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) {
                            continue;
                        }
                        int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge_[k] = true;
                            }
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                long base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            long b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                                bestedge_[b] = k;
                            }
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                                bestedge_[w] = k;
                            }
                        }
                    }
                }
                if (augmented) {
                    break;
                }
                int deltatype = -1;
                int64_t delta = 0;
                long deltaedge = -1, deltablossom = -1;
                if (!maxcard_) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
                }
                for (long v = 0; v < n_; v++) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        int64_t d = slack(bestedge_[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (long b = 0; b < 2 * n_; b++) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        int64_t d = slack(bestedge_[b]) / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (long b = n_; b < 2 * n_; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        (deltatype == -1 || dualvar_[b] < delta)) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    deltatype = 1;
                    delta = std::max<int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + n_));
                }
                for (long v = 0; v < n_; v++) {
                    if (label_[inblossom_[v]] == 1) {
                        dualvar_[v] -= delta;
                    } else if (label_[inblossom_[v]] == 2) {
                        dualvar_[v] += delta;
                    }
                }
                for (long b = n_; b < 2 * n_; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) {
                            dualvar_[b] += delta;
                        } else if (label_[b] == 2) {
                            dualvar_[b] -= delta;
                        }
                    }
                }
                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = true;
                    long i = static_cast<long>(edges_[deltaedge].u), j = static_cast<long>(edges_[deltaedge].v);
                    if (label_[inblossom_[i]] == 0) {
                        std::swap(i, j);
                    }
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = true;
                    queue_.push_back(static_cast<long>(edges_[deltaedge].u));
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) {
                break;
            }
            for (long b = n_; b < 2 * n_; b++) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                    expand_blossom(b, true);
                }
            }
        }
        (void)ne;
        std::vector<long> out(n_, -1);
        for (long v = 0; v < n_; v++) {
            if (mate_[v] >= 0) {
                out[v] = endpoint_[mate_[v]];
            }
        }
        return out;
    }

   private:
    int64_t slack(long k) const {
        return dualvar_[edges_[k].u] + dualvar_[edges_[k].v] - 2 * edges_[k].weight;
    }

    void leaves(long b, std::vector<long> &out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (long t : blossomchilds_[b]) {
            leaves(t, out);
        }
    }
    std::vector<long> leaves(long b) const {
        std::vector<long> out;
        leaves(b, out);
        return out;
    }

    void assign_label(long w, int t, long p) {
        long b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            auto lv = leaves(b);
            queue_.insert(queue_.end(), lv.begin(), lv.end());
        } else if (t == 2) {
            long base = blossombase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    long scan_blossom(long v, long w) {
        std::vector<long> path;
        long base = -1;
        while (v != -1 || w != -1) {
            long b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) {
                std::swap(v, w);
            }
        }
        for (long b : path) {
            label_[b] = 1;
        }
        return base;
    }

    void add_blossom(long base, long k) {
        long v = static_cast<long>(edges_[k].u), w = static_cast<long>(edges_[k].v);
        long bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
        long b = unused_.back();
        unused_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<long> path, endps;
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        blossomchilds_[b] = path;
        blossomendps_[b] = endps;
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (long lv : leaves(b)) {
            if (label_[inblossom_[lv]] == 2) {
                queue_.push_back(lv);
            }
            inblossom_[lv] = b;
        }
        std::vector<long> bestedgeto(2 * n_, -1);
        for (long sub : path) {
            std::vector<std::vector<long>> nblists;
            if (!has_bestedges_[sub]) {
                for (long lv : leaves(sub)) {
                    std::vector<long> ks;
                    for (long p : neighbend_[lv]) {
                        ks.push_back(p / 2);
                    }
                    nblists.push_back(ks);
                }
            } else {
                nblists.push_back(blossombestedges_[sub]);
            }
            for (const auto &nb : nblists) {
                for (long kk : nb) {
                    long i = static_cast<long>(edges_[kk].u), j = static_cast<long>(edges_[kk].v);
                    if (inblossom_[j] == b) {
                        std::swap(i, j);
                    }
                    long bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                        bestedgeto[bj] = kk;
                    }
                }
            }
            blossombestedges_[sub].clear();
            has_bestedges_[sub] = false;
            bestedge_[sub] = -1;
        }
        blossombestedges_[b].clear();
        for (long kk : bestedgeto) {
            if (kk != -1) {
                blossombestedges_[b].push_back(kk);
            }
        }
        has_bestedges_[b] = true;
        bestedge_[b] = -1;
        for (long kk : blossombestedges_[b]) {
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) {
                bestedge_[b] = kk;
            }
        }
    }

    long child_at(long b, long j) const {
        long len = static_cast<long>(blossomchilds_[b].size());
        return blossomchilds_[b][((j % len) + len) % len];
    }
    long endp_at(long b, long j) const {
        long len = static_cast<long>(blossomendps_[b].size());
        return blossomendps_[b][((j % len) + len) % len];
    }

    void expand_blossom(long b, bool endstage) {
        for (long s : blossomchilds_[b]) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (long v : leaves(s)) {
                    inblossom_[v] = s;
                }
            }
        }
        if (!endstage && label_[b] == 2) {
            long entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            const auto &ch = blossomchilds_[b];
            long j = static_cast<long>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            long jstep, endptrick;
            if (j & 1) {
                j -= static_cast<long>(ch.size());
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            long p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[endp_at(b, j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[endp_at(b, j - endptrick) / 2] = true;
                j += jstep;
                p = endp_at(b, j - endptrick) ^ endptrick;
                allowedge_[p / 2] = true;
                j += jstep;
            }
            long bv = child_at(b, j);
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (child_at(b, j) != entrychild) {
                bv = child_at(b, j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                long found = -1;
                for (long v : leaves(bv)) {
                    if (label_[v] != 0) {
                        found = v;
                        break;
                    }
                }
                if (found != -1) {
                    label_[found] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = false;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(long b, long v) {
        long t = v;
        while (blossomparent_[t] != b) {
            t = blossomparent_[t];
        }
        if (t >= n_) {
            augment_blossom(t, v);
        }
        auto &ch = blossomchilds_[b];
        long i = static_cast<long>(std::find(ch.begin(), ch.end(), t) - ch.begin());
        long j = i;
        long jstep, endptrick;
        if (i & 1) {
            j -= static_cast<long>(ch.size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = child_at(b, j);
            long p = endp_at(b, j - endptrick) ^ endptrick;
            if (t >= n_) {
                augment_blossom(t, endpoint_[p]);
            }
            j += jstep;
            t = child_at(b, j);
            if (t >= n_) {
                augment_blossom(t, endpoint_[p ^ 1]);
            }
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        auto &ep = blossomendps_[b];
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        blossombase_[b] = blossombase_[ch[0]];
    }

    void augment_matching(long k) {
        long v = static_cast<long>(edges_[k].u), w = static_cast<long>(edges_[k].v);
        for (auto [s, p] : {std::pair<long, long>{v, 2 * k + 1}, std::pair<long, long>{w, 2 * k}}) {
            while (true) {
                long bs = inblossom_[s];
                if (bs >= n_) {
                    augment_blossom(bs, s);
                }
                mate_[s] = p;
                if (labelend_[bs] == -1) {
                    break;
                }
                long t = endpoint_[labelend_[bs]];
                long bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                long j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= n_) {
                    augment_blossom(bt, j);
                }
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    long n_;
    std::vector<WeightedEdge> edges_;
    bool maxcard_;
    std::vector<long> endpoint_;
    std::vector<std::vector<long>> neighbend_;
    std::vector<long> mate_, label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_, unused_, queue_;
    std::vector<std::vector<long>> blossomchilds_, blossomendps_, blossombestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<int64_t> dualvar_;
    std::vector<bool> allowedge_;
};

}  // namespace

std::vector<long> max_weight_matching(size_t num_vertices, const std::vector<WeightedEdge> &edges,
                                      bool max_cardinality) {
    if (edges.empty()) {
        return std::vector<long>(num_vertices, -1);
    }
    return Matcher(num_vertices, edges, max_cardinality).run();
}

}  // namespace colorsurg
