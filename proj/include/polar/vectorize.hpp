#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "polar/tokenizer.hpp"

namespace polar {

// Sparse vector over a fixed vocabulary: strictly increasing indices with
// finite weights. Unit Euclidean norm after tfidf() unless all-zero.
struct TermVector {
  std::vector<std::uint32_t> indices;
  std::vector<double> values;
  std::size_t dim = 0;

  std::size_t nnz() const { return indices.size(); }
};

// Term -> (dense index, document frequency) plus the corpus size N.
// Indices are assigned in lexicographic term order, so the mapping is
// independent of the order bags are consumed in. Immutable after build.
class Vocabulary {
 public:
  Vocabulary() = default;

  static Vocabulary build(std::span<const TermBag> bags);  // throws Error on empty corpus

  std::size_t size() const { return terms_.size(); }
  std::uint64_t corpus_size() const { return corpus_size_; }

  // -1 when out of vocabulary.
  std::int64_t index_of(const std::string& term) const;
  const std::string& term(std::size_t index) const { return terms_[index]; }
  std::uint32_t df(std::size_t index) const { return df_[index]; }

  const std::vector<std::string>& terms() const { return terms_; }
  const std::vector<std::uint32_t>& dfs() const { return df_; }

  // For deserialization: terms must already be sorted, dfs parallel.
  static Vocabulary from_parts(std::vector<std::string> terms, std::vector<std::uint32_t> dfs,
                               std::uint64_t corpus_size);

 private:
  std::vector<std::string> terms_;
  std::vector<std::uint32_t> df_;
  std::unordered_map<std::string, std::uint32_t> index_;
  std::uint64_t corpus_size_ = 0;
};

// tf-idf weighting: tf = count / total bag counts, idf = ln(N / df),
// out-of-vocabulary terms dropped, exact zero weights dropped, and the
// result scaled to unit Euclidean norm when nonzero.
TermVector tfidf(const TermBag& bag, const Vocabulary& vocab);

}  // namespace polar
