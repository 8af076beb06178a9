#ifndef NAGAOLAB_NAGAO_HPP_
#define NAGAOLAB_NAGAO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "amalgam.hpp"

namespace nagaolab {

  // SL2(F_p[t]) = SL2(F_p) *_{B(F_p)} B(F_p[t]).
  //
  // Right transversals: in SL2(F_p) the matrices [[0, -1], [1, e]], e in F_p;
  // in B(F_p[t]) the matrices E12(f) with f(0) = 0.
  class NagaoStructureFp final : public AmalgamStructure {
   public:
    // Throws DomainError unless p is prime.
    explicit NagaoStructureFp(std::uint64_t p);

    std::uint64_t prime() const noexcept {
      return _ring.modulus();
    }

    std::string        id() const override;
    Ring               ring() const override;
    bool               in_subgroup(SL2 const& g) const override;
    bool               in_factor(Factor f, SL2 const& g) const override;
    CosetDecomposition decompose(Factor f, SL2 const& g) const override;

   private:
    Ring _ring;
  };

  // E2(Z[t]) = SL2(Z) *_{B(Z)} B(Z[t]).
  //
  // Right transversal in SL2(Z): the coset B(Z)*g is determined by the bottom
  // row (c, d) up to sign. For c != 0 the representative is [[x, y], [c, d]]
  // with c > 0 and 0 <= x < c. In B(Z[t]) the representatives are E12(f)
  // with f(0) = 0.
  class E2ZtStructure final : public AmalgamStructure {
   public:
    std::string        id() const override;
    Ring               ring() const override;
    bool               in_subgroup(SL2 const& g) const override;
    bool               in_factor(Factor f, SL2 const& g) const override;
    CosetDecomposition decompose(Factor f, SL2 const& g) const override;
  };

  using GeneratorWord = std::vector<Generator>;

  Mat2 product(GeneratorWord const& w, Ring ring);

  // Factors a determinant one integer matrix as a word in E12(n), E21(n)
  // and W by a Euclidean algorithm on the first column. The product of the
  // output is re-verified. Throws NotSpecialLinear.
  GeneratorWord sl2z_factor(Mat2 const& m);

  // Factors a determinant one matrix over F_p[t] as a word in E12(f),
  // E21(f) and Diag(u) by the polynomial Euclidean algorithm on the first
  // column. The product of the output is re-verified. Throws
  // NotSpecialLinear.
  GeneratorWord sl2fpt_elementary_factor(Mat2 const& m);

  // Letters for a generator word: E12 goes to factor two, W and Diag to
  // factor one, and E21(f) is spelled W^-1 E12(-f) W.
  Word classify(GeneratorWord const& w);

  // Normal form from an elementary factorization of m.
  NormalForm nagao_nf_via_factorization(NagaoStructureFp const& s, Mat2 const& m);

  // Normal form read off directly from m, peeling coset representatives
  // off the right by degree reduction of the bottom row.
  NormalForm nagao_nf_via_degree_reduction(NagaoStructureFp const& s, Mat2 const& m);

  // Both of the above; throws InternalInconsistency if they disagree and
  // NotSpecialLinear unless det(m) = 1.
  NormalForm nagao_normal_form(NagaoStructureFp const& s, Mat2 const& m);
  NormalForm nagao_normal_form(std::uint64_t p, Mat2 const& m);

  // Letters of an E2(Z[t]) word must be in SL2(Z) (factor one) or B(Z[t])
  // (factor two). Throws InvalidLetter.
  NormalForm e2zt_normal_form(Word const& w);

  // Letterwise reduction mod p: SL2(Z) letters land in SL2(F_p) and B(Z[t])
  // letters in B(F_p[t]), factor tags are kept.
  Word reduce_word_mod(Word const& w, std::uint64_t p);

  struct PhiResult {
    Mat2       matrix;
    NormalForm normal_form;
  };

  // The reduction homomorphism E2(Z[t]) -> SL2(F_p[t]) on a word. The normal
  // form is computed from the letterwise reduced word and checked against
  // the normal form of the reduced product matrix; a disagreement throws
  // InternalInconsistency.
  PhiResult phi_p(Word const& w, std::uint64_t p);

  // An E2(Z[t]) word whose image under phi_p is the matrix of g, for any
  // generator g over F_p.
  Word lift_generator(Generator const& g);

  // An E2(Z[t]) word whose image under phi_p is m, for any m in SL2(F_p[t]).
  Word lift_to_e2zt(Mat2 const& m);

  // The shared, immutable E2(Z[t]) structure.
  E2ZtStructure const& e2zt_structure();

}  // namespace nagaolab

#endif  // NAGAOLAB_NAGAO_HPP_
