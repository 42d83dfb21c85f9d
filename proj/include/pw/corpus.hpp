#pragma once

// The test corpus: one entry per isomorphism class of small posets, with
// its Birkhoff lattice and Priestley space, plus the validator runner.

#include <string>
#include <vector>

#include "pw/json_io.hpp"

namespace pw {

struct CorpusEntry {
  std::string id;
  Poset poset;
  FinDLat lattice;
  FinPriestley space;
};

struct Corpus {
  int max_size = 0;
  std::vector<CorpusEntry> entries;
  // Hash over the entry ids in order.
  std::string content_hash;
};

Corpus gen_corpus(int max_size, const Limits& limits = default_limits());

Json corpus_to_json(const Corpus& c);
Corpus corpus_from_json(const Json& j, const Limits& limits = default_limits());

// Runs each validator on each entry (every corpus lattice is a partner for
// properCoherent) on `jobs` worker threads. Reports come back sorted by
// (lattice id, validator order).
std::vector<ValidationReport> run_validators(const Corpus& c, const std::vector<Validator>& validators, int jobs = 1);

}  // namespace pw
