#include "polar/vectorize.hpp"

#include <algorithm>
#include <cmath>

#include "polar/error.hpp"
#include "polar/kernels.hpp"

namespace polar {

Vocabulary Vocabulary::build(std::span<const TermBag> bags) {
  if (bags.empty()) throw Error("cannot build vocabulary from an empty corpus");
  std::unordered_map<std::string, std::uint32_t> df;
  for (const TermBag& bag : bags) {
    for (const auto& [term, count] : bag) {
      (void)count;
      ++df[term];
    }
  }
  Vocabulary v;
  v.corpus_size_ = bags.size();
  v.terms_.reserve(df.size());
  for (const auto& [term, n] : df) {
    (void)n;
    v.terms_.push_back(term);
  }
  std::sort(v.terms_.begin(), v.terms_.end());
  v.df_.reserve(v.terms_.size());
  v.index_.reserve(v.terms_.size());
  for (std::uint32_t i = 0; i < v.terms_.size(); ++i) {
    v.df_.push_back(df[v.terms_[i]]);
    v.index_.emplace(v.terms_[i], i);
  }
  return v;
}

Vocabulary Vocabulary::from_parts(std::vector<std::string> terms, std::vector<std::uint32_t> dfs,
                                  std::uint64_t corpus_size) {
  if (terms.size() != dfs.size()) throw Error("vocabulary terms/dfs size mismatch");
  if (!std::is_sorted(terms.begin(), terms.end())) throw Error("vocabulary terms must be sorted");
  Vocabulary v;
  v.terms_ = std::move(terms);
  v.df_ = std::move(dfs);
  v.corpus_size_ = corpus_size;
  v.index_.reserve(v.terms_.size());
  for (std::uint32_t i = 0; i < v.terms_.size(); ++i) v.index_.emplace(v.terms_[i], i);
  return v;
}

std::int64_t Vocabulary::index_of(const std::string& term) const {
  auto it = index_.find(term);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

TermVector tfidf(const TermBag& bag, const Vocabulary& vocab) {
  TermVector out;
  out.dim = vocab.size();

  double total = 0.0;
  for (const auto& [term, count] : bag) {
    (void)term;
    total += count;
  }
  if (total == 0.0) return out;

  std::vector<std::pair<std::uint32_t, double>> entries;
  entries.reserve(bag.size());
  const double n = static_cast<double>(vocab.corpus_size());
  for (const auto& [term, count] : bag) {
    std::int64_t idx = vocab.index_of(term);
    if (idx < 0) continue;  // out of vocabulary
    double tf = count / total;
    double idf = std::log(n / vocab.df(static_cast<std::size_t>(idx)));
    double w = tf * idf;
    if (w == 0.0) continue;  // df == N terms carry no signal
    entries.emplace_back(static_cast<std::uint32_t>(idx), w);
  }
  std::sort(entries.begin(), entries.end());

  out.indices.reserve(entries.size());
  out.values.reserve(entries.size());
  for (const auto& [i, w] : entries) {
    out.indices.push_back(i);
    out.values.push_back(w);
  }
  double norm2 = kernels::squared_norm(out.values);
  if (norm2 > 0.0) kernels::scale(out.values, 1.0 / std::sqrt(norm2));
  return out;
}

}  // namespace polar
