// Smith normal form by elementary operations, pivoting on the entry of
// least absolute value. All four transforms are tracked so callers can
// move between original and diagonal coordinates in both directions.

#include "floer/exactlin.hpp"

namespace floer {
namespace {

class Reducer {
 public:
  Reducer(const IntMatrix& M, const Ring& R, bool tr)
      : ring_(R), tr_(tr), m_(M.rows()), n_(M.cols()), a_(M.reduced(R).to_dense()) {
    if (tr_) {
      L_ = eye(m_);
      Li_ = eye(m_);
      Rt_ = eye(n_);
      Ri_ = eye(n_);
    }
  }

  SmithForm run() {
    if (ring_.is_field())
      field();
    else
      integers();
    SmithForm sf;
    for (std::size_t t = 0; t < std::min(m_, n_) && a_[t][t] != 0; ++t) sf.factors.push_back(a_[t][t]);
    if (tr_) {
      sf.left = IntMatrix::from_dense(L_, m_, m_);
      sf.left_inv = IntMatrix::from_dense(Li_, m_, m_);
      sf.right = IntMatrix::from_dense(Rt_, n_, n_);
      sf.right_inv = IntMatrix::from_dense(Ri_, n_, n_);
    }
    return sf;
  }

 private:
  static Dense eye(std::size_t k) {
    Dense d(k, Vec(k, Int(0)));
    for (std::size_t i = 0; i < k; ++i) d[i][i] = 1;
    return d;
  }

  void red(Int& x) const { ring_.reduce(x); }

  // row_i += c * row_j
  void row_add(std::size_t i, std::size_t j, Int c) {
    for (std::size_t k = 0; k < n_; ++k)
      if (a_[j][k] != 0) {
        a_[i][k] += c * a_[j][k];
        red(a_[i][k]);
      }
    if (!tr_) return;
    for (std::size_t k = 0; k < m_; ++k) {
      if (L_[j][k] != 0) {
        L_[i][k] += c * L_[j][k];
        red(L_[i][k]);
      }
      if (Li_[k][i] != 0) {
        Li_[k][j] -= c * Li_[k][i];
        red(Li_[k][j]);
      }
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    if (!tr_) return;
    std::swap(L_[i], L_[j]);
    for (std::size_t k = 0; k < m_; ++k) std::swap(Li_[k][i], Li_[k][j]);
  }

  void row_scale(std::size_t i, Int c, Int cinv) {
    for (std::size_t k = 0; k < n_; ++k) {
      a_[i][k] *= c;
      red(a_[i][k]);
    }
    if (!tr_) return;
    for (std::size_t k = 0; k < m_; ++k) {
      L_[i][k] *= c;
      red(L_[i][k]);
      Li_[k][i] *= cinv;
      red(Li_[k][i]);
    }
  }

  // col_j += c * col_i
  void col_add(std::size_t j, std::size_t i, Int c) {
    for (std::size_t k = 0; k < m_; ++k)
      if (a_[k][i] != 0) {
        a_[k][j] += c * a_[k][i];
        red(a_[k][j]);
      }
    if (!tr_) return;
    for (std::size_t k = 0; k < n_; ++k) {
      if (Rt_[k][i] != 0) {
        Rt_[k][j] += c * Rt_[k][i];
        red(Rt_[k][j]);
      }
      if (Ri_[j][k] != 0) {
        Ri_[i][k] -= c * Ri_[j][k];
        red(Ri_[i][k]);
      }
    }
  }

  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < m_; ++k) std::swap(a_[k][i], a_[k][j]);
    if (!tr_) return;
    for (std::size_t k = 0; k < n_; ++k) std::swap(Rt_[k][i], Rt_[k][j]);
    std::swap(Ri_[i], Ri_[j]);
  }

  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    for (std::size_t i = t; i < m_; ++i)
      for (std::size_t j = t; j < n_; ++j) {
        if (a_[i][j] == 0) continue;
        if (!found || mpz_cmpabs(a_[i][j].get_mpz_t(), a_[pi][pj].get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
          if (abs(a_[i][j]) == 1 || ring_.is_field()) return true;
        }
      }
    return found;
  }

  void field() {
    for (std::size_t t = 0; t < std::min(m_, n_); ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) return;
      row_swap(t, pi);
      col_swap(t, pj);
      const Int inv = ring_.inverse(a_[t][t]);
      row_scale(t, inv, a_[t][t]);
      for (std::size_t i = t + 1; i < m_; ++i)
        if (a_[i][t] != 0) row_add(i, t, -a_[i][t]);
      for (std::size_t j = t + 1; j < n_; ++j)
        if (a_[t][j] != 0) col_add(j, t, -a_[t][j]);
    }
  }

  void integers() {
    for (std::size_t t = 0; t < std::min(m_, n_); ++t) {
      std::size_t pi = 0, pj = 0;
      if (!find_pivot(t, pi, pj)) return;
      row_swap(t, pi);
      col_swap(t, pj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m_; ++i)
          if (a_[i][t] != 0) {
            Int q = a_[i][t] / a_[t][t];
            if (q != 0) row_add(i, t, -q);
            if (a_[i][t] != 0) clean = false;
          }
        for (std::size_t j = t + 1; j < n_; ++j)
          if (a_[t][j] != 0) {
            Int q = a_[t][j] / a_[t][t];
            if (q != 0) col_add(j, t, -q);
            if (a_[t][j] != 0) clean = false;
          }
        if (!clean) {
          // a remainder smaller than the pivot survived; promote it
          std::size_t bi = t, bj = t;
          for (std::size_t i = t + 1; i < m_; ++i)
            if (a_[i][t] != 0 && mpz_cmpabs(a_[i][t].get_mpz_t(), a_[bi][bj].get_mpz_t()) < 0) bi = i, bj = t;
          for (std::size_t j = t + 1; j < n_; ++j)
            if (a_[t][j] != 0 && mpz_cmpabs(a_[t][j].get_mpz_t(), a_[bi][bj].get_mpz_t()) < 0) bi = t, bj = j;
          row_swap(t, bi);
          col_swap(t, bj);
          continue;
        }
        std::size_t bad = m_;
        for (std::size_t i = t + 1; i < m_ && bad == m_; ++i)
          for (std::size_t j = t + 1; j < n_; ++j)
            if (a_[i][j] % a_[t][t] != 0) {
              bad = i;
              break;
            }
        if (bad == m_) break;
        row_add(t, bad, 1);
      }
      if (a_[t][t] < 0) row_scale(t, -1, -1);
    }
  }

  Ring ring_;
  bool tr_;
  std::size_t m_, n_;
  Dense a_, L_, Li_, Rt_, Ri_;
};

}  // namespace

SmithForm snf(const IntMatrix& M, const Ring& R, bool transforms) { return Reducer(M, R, transforms).run(); }

}  // namespace floer
