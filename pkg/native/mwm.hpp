// Exact maximum-weight matching (Galil / van Rantwijk O(n^3) blossom
// algorithm), ported from the classic mwmatching.py reference.  With
// max_cardinality=true and transformed weights this yields exact
// minimum-weight perfect matchings.
#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <vector>

namespace ftmwm {

class MaxWeightMatching {
 public:
  // edges: (i, j, weight), i != j, at most one edge per pair.
  MaxWeightMatching(const std::vector<std::array<int, 2>>& ends,
                    const std::vector<double>& weights, int nvertex,
                    bool maxcardinality)
      : edges_(ends), wt_(weights), nvertex_(nvertex), maxcard_(maxcardinality) {}

  // Returns mate vector (vertex -> matched vertex or -1).
  std::vector<int> run() {
    int nedge = static_cast<int>(edges_.size());
    int nv = nvertex_;
    if (nv == 0) return {};
    maxweight_ = 0.0;
    for (double w : wt_) maxweight_ = std::max(maxweight_, w);

    endpoint_.resize(2 * nedge);
    for (int p = 0; p < 2 * nedge; ++p) endpoint_[p] = edges_[p / 2][p % 2];
    neighbend_.assign(nv, {});
    for (int k = 0; k < nedge; ++k) {
      neighbend_[edges_[k][0]].push_back(2 * k + 1);
      neighbend_[edges_[k][1]].push_back(2 * k);
    }

    mate_.assign(nv, -1);
    label_.assign(2 * nv, 0);
    labelend_.assign(2 * nv, -1);
    inblossom_.resize(nv);
    for (int v = 0; v < nv; ++v) inblossom_[v] = v;
    blossomparent_.assign(2 * nv, -1);
    blossomchilds_.assign(2 * nv, {});
    blossombase_.resize(2 * nv);
    for (int v = 0; v < nv; ++v) blossombase_[v] = v;
    for (int b = nv; b < 2 * nv; ++b) blossombase_[b] = -1;
    blossomendps_.assign(2 * nv, {});
    bestedge_.assign(2 * nv, -1);
    blossombestedges_.assign(2 * nv, {});
    unusedblossoms_.clear();
    for (int b = nv; b < 2 * nv; ++b) unusedblossoms_.push_back(b);
    dualvar_.assign(2 * nv, 0.0);
    for (int v = 0; v < nv; ++v) dualvar_[v] = maxweight_;
    allowedge_.assign(nedge, false);
    queue_.clear();

    for (int t = 0; t < nv; ++t) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = nv; b < 2 * nv; ++b) blossombestedges_[b].clear();
      std::fill(allowedge_.begin(), allowedge_.end(), false);
      queue_.clear();
      for (int v = 0; v < nv; ++v)
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            int k = p / 2;
            int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            double kslack = 0.0;
            if (!allowedge_[k]) {
              kslack = slack(k);
              if (kslack <= tol_) allowedge_[k] = true;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                assign_label(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                int base = scan_blossom(v, w);
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
              int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int deltatype = -1;
        double delta = 0.0;
        int deltaedge = -1, deltablossom = -1;
        if (!maxcard_) {
          deltatype = 1;
          delta = std::max(0.0, *std::min_element(dualvar_.begin(), dualvar_.begin() + nv));
        }
        for (int v = 0; v < nv; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            double d = slack(bestedge_[v]);
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * nv; ++b) {
          if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            double d = slack(bestedge_[b]) / 2.0;
            if (deltatype == -1 || d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = nv; b < 2 * nv; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
              (deltatype == -1 || dualvar_[b] < delta)) {
            delta = dualvar_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        if (deltatype == -1) {
          // No further improvement possible (max-cardinality mode).
          deltatype = 1;
          delta = std::max(0.0, *std::min_element(dualvar_.begin(), dualvar_.begin() + nv));
        }
        for (int v = 0; v < nv; ++v) {
          int lbl = label_[inblossom_[v]];
          if (lbl == 1)
            dualvar_[v] -= delta;
          else if (lbl == 2)
            dualvar_[v] += delta;
        }
        for (int b = nv; b < 2 * nv; ++b) {
          if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
            if (label_[b] == 1)
              dualvar_[b] += delta;
            else if (label_[b] == 2)
              dualvar_[b] -= delta;
          }
        }
        if (deltatype == 1) break;
        if (deltatype == 2) {
          allowedge_[deltaedge] = true;
          int i = endpoint_[2 * deltaedge];
          if (label_[inblossom_[i]] == 0) i = endpoint_[2 * deltaedge + 1];
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = true;
          queue_.push_back(endpoint_[2 * deltaedge]);
        } else if (deltatype == 4) {
          expand_blossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = nvertex_; b < 2 * nvertex_; ++b)
        if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
            dualvar_[b] < tol_ && dualvar_[b] > -tol_)
          expand_blossom(b, true);
    }

    std::vector<int> mate(nv, -1);
    for (int v = 0; v < nv; ++v)
      if (mate_[v] >= 0) mate[v] = endpoint_[mate_[v]];
    return mate;
  }

 private:
  const std::vector<std::array<int, 2>>& edges_;
  const std::vector<double>& wt_;
  int nvertex_;
  bool maxcard_;
  double maxweight_ = 0.0;
  static constexpr double tol_ = 1e-9;

  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_, labelend_, inblossom_, blossomparent_, blossombase_, bestedge_;
  std::vector<std::vector<int>> blossomchilds_, blossomendps_, blossombestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<double> dualvar_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;

  double slack(int k) const {
    return dualvar_[edges_[k][0]] + dualvar_[edges_[k][1]] - 2.0 * wt_[k];
  }

  void blossom_leaves(int b, std::vector<int>& out) const {
    if (b < nvertex_) {
      out.push_back(b);
    } else {
      for (int t : blossomchilds_[b]) blossom_leaves(t, out);
    }
  }

  void assign_label(int w, int t, int p) {
    int b = inblossom_[w];
    assert(label_[w] == 0 && label_[b] == 0);
    label_[w] = t;
    label_[b] = t;
    labelend_[w] = p;
    labelend_[b] = p;
    bestedge_[w] = -1;
    bestedge_[b] = -1;
    if (t == 1) {
      std::vector<int> leaves;
      blossom_leaves(b, leaves);
      for (int v : leaves) queue_.push_back(v);
    } else {
      int base = blossombase_[b];
      assert(mate_[base] >= 0);
      assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int scan_blossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = blossombase_[b];
        break;
      }
      assert(label_[b] == 1);
      path.push_back(b);
      label_[b] = 5;
      assert(labelend_[b] == mate_[blossombase_[b]]);
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        assert(label_[b] == 2);
        assert(labelend_[b] >= 0);
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void add_blossom(int base, int k) {
    int v = edges_[k][0], w = edges_[k][1];
    int bb = inblossom_[base], bv = inblossom_[v], bw = inblossom_[w];
    int b = unusedblossoms_.back();
    unusedblossoms_.pop_back();
    blossombase_[b] = base;
    blossomparent_[b] = -1;
    blossomparent_[bb] = b;
    std::vector<int> path, endps;
    while (bv != bb) {
      blossomparent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      assert(label_[bv] == 2 || (label_[bv] == 1 && labelend_[bv] == mate_[blossombase_[bv]]));
      assert(labelend_[bv] >= 0);
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
      assert(label_[bw] == 2 || (label_[bw] == 1 && labelend_[bw] == mate_[blossombase_[bw]]));
      assert(labelend_[bw] >= 0);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    blossomchilds_[b] = path;
    blossomendps_[b] = endps;
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dualvar_[b] = 0.0;
    std::vector<int> leaves;
    blossom_leaves(b, leaves);
    for (int leaf : leaves) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }
    // Compute blossombestedges.
    std::vector<int> bestedgeto(2 * nvertex_, -1);
    for (int bvv : path) {
      std::vector<std::vector<int>> nblists;
      if (!blossombestedges_[bvv].empty()) {
        nblists.push_back(blossombestedges_[bvv]);
      } else {
        std::vector<int> leaves2;
        blossom_leaves(bvv, leaves2);
        for (int u : leaves2) {
          std::vector<int> ks;
          for (int p : neighbend_[u]) ks.push_back(p / 2);
          nblists.push_back(ks);
        }
      }
      for (auto& nblist : nblists) {
        for (int kk : nblist) {
          int i = edges_[kk][0], j = edges_[kk][1];
          if (inblossom_[j] == b) std::swap(i, j);
          int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 &&
              (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj])))
            bestedgeto[bj] = kk;
        }
      }
      blossombestedges_[bvv].clear();
      bestedge_[bvv] = -1;
    }
    blossombestedges_[b].clear();
    for (int kk : bestedgeto)
      if (kk != -1) blossombestedges_[b].push_back(kk);
    bestedge_[b] = -1;
    for (int kk : blossombestedges_[b])
      if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }

  void expand_blossom(int b, bool endstage) {
    for (int s : blossomchilds_[b]) {
      blossomparent_[s] = -1;
      if (s < nvertex_) {
        inblossom_[s] = s;
      } else if (endstage && dualvar_[s] < tol_ && dualvar_[s] > -tol_) {
        expand_blossom(s, endstage);
      } else {
        std::vector<int> leaves;
        blossom_leaves(s, leaves);
        for (int v : leaves) inblossom_[v] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      assert(labelend_[b] >= 0);
      int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = 0;
      for (size_t i = 0; i < blossomchilds_[b].size(); ++i)
        if (blossomchilds_[b][i] == entrychild) { j = static_cast<int>(i); break; }
      int jstep, endptrick;
      if (j & 1) {
        j -= static_cast<int>(blossomchilds_[b].size());
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        int idx = mod(j - endptrick, blossomchilds_[b].size());
        label_[endpoint_[blossomendps_[b][idx] ^ endptrick ^ 1]] = 0;
        assign_label(endpoint_[p ^ 1], 2, p);
        allowedge_[blossomendps_[b][idx] / 2] = true;
        j += jstep;
        idx = mod(j - endptrick, blossomchilds_[b].size());
        p = blossomendps_[b][idx] ^ endptrick;
        allowedge_[p / 2] = true;
        j += jstep;
      }
      int bv = blossomchilds_[b][mod(j, blossomchilds_[b].size())];
      label_[endpoint_[p ^ 1]] = 2;
      label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = p;
      labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (blossomchilds_[b][mod(j, blossomchilds_[b].size())] != entrychild) {
        bv = blossomchilds_[b][mod(j, blossomchilds_[b].size())];
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        std::vector<int> leaves;
        blossom_leaves(bv, leaves);
        int v = -1;
        for (int u : leaves)
          if (label_[u] != 0) { v = u; break; }
        if (v != -1) {
          assert(label_[v] == 2);
          assert(inblossom_[v] == bv);
          label_[v] = 0;
          label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
          assign_label(v, 2, labelend_[v]);
        }
        j += jstep;
      }
    }
    label_[b] = -1;
    labelend_[b] = -1;
    blossomchilds_[b].clear();
    blossomendps_[b].clear();
    blossombase_[b] = -1;
    blossombestedges_[b].clear();
    bestedge_[b] = -1;
    unusedblossoms_.push_back(b);
  }

  void augment_blossom(int b, int v) {
    int t = v;
    while (blossomparent_[t] != b) t = blossomparent_[t];
    if (t >= nvertex_) augment_blossom(t, v);
    int i = 0;
    for (size_t idx = 0; idx < blossomchilds_[b].size(); ++idx)
      if (blossomchilds_[b][idx] == t) { i = static_cast<int>(idx); break; }
    int j = i;
    int jstep, endptrick;
    if (j & 1) {
      j -= static_cast<int>(blossomchilds_[b].size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      int tt = blossomchilds_[b][mod(j, blossomchilds_[b].size())];
      int p = blossomendps_[b][mod(j - endptrick, blossomchilds_[b].size())] ^ endptrick;
      if (tt >= nvertex_) augment_blossom(tt, endpoint_[p]);
      j += jstep;
      tt = blossomchilds_[b][mod(j, blossomchilds_[b].size())];
      if (tt >= nvertex_) augment_blossom(tt, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(blossomchilds_[b].begin(), blossomchilds_[b].begin() + i, blossomchilds_[b].end());
    std::rotate(blossomendps_[b].begin(), blossomendps_[b].begin() + i, blossomendps_[b].end());
    blossombase_[b] = blossombase_[blossomchilds_[b][0]];
    assert(blossombase_[b] == v);
  }

  void augment_matching(int k) {
    int v = edges_[k][0], w = edges_[k][1];
    for (int pass = 0; pass < 2; ++pass) {
      int s = pass == 0 ? v : w;
      int p = pass == 0 ? 2 * k + 1 : 2 * k;
      while (true) {
        int bs = inblossom_[s];
        assert(label_[bs] == 1);
        assert(labelend_[bs] == mate_[blossombase_[bs]]);
        if (bs >= nvertex_) augment_blossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        int t = endpoint_[labelend_[bs]];
        int bt = inblossom_[t];
        assert(label_[bt] == 2);
        assert(labelend_[bt] >= 0);
        s = endpoint_[labelend_[bt]];
        int j = endpoint_[labelend_[bt] ^ 1];
        assert(blossombase_[bt] == t);
        if (bt >= nvertex_) augment_blossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  static int mod(int a, size_t m) {
    int mm = static_cast<int>(m);
    int r = a % mm;
    return r < 0 ? r + mm : r;
  }
};

}  // namespace ftmwm
