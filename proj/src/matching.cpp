#include "sgx/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace sgx {

namespace {

class Blossom {
public:
    explicit Blossom(const std::vector<std::vector<int>>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())), mate_(n_, -1), parent_(n_), base_(n_),
          used_(n_), in_blossom_(n_) {}

    std::vector<int> run() {
        // Greedy warm start, then augment from every exposed vertex.
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1)
                for (int w : adj_[v])
                    if (mate_[w] == -1) {
                        mate_[v] = w;
                        mate_[w] = v;
                        break;
                    }
        for (int v = 0; v < n_; ++v)
            if (mate_[v] == -1) {
                int end = find_path(v);
                while (end != -1) {
                    int pv = parent_[end], ppv = mate_[pv];
                    mate_[end] = pv;
                    mate_[pv] = end;
                    end = ppv;
                }
            }
        return mate_;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (mate_[a] == -1) break;
            a = parent_[mate_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;
                    used_[mate_[to]] = true;
                    q.push(mate_[to]);
                }
            }
        }
        return -1;
    }

    const std::vector<std::vector<int>>& adj_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

}  // namespace

std::vector<int> maximum_matching(const std::vector<std::vector<int>>& adj) { return Blossom(adj).run(); }

std::size_t maximum_matching_size(const std::vector<std::vector<int>>& adj) {
    auto mate = maximum_matching(adj);
    return static_cast<std::size_t>(std::count_if(mate.begin(), mate.end(), [](int m) { return m != -1; })) / 2;
}

}  // namespace sgx
