#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "melodynet/melody.hpp"

namespace melodynet {

// First-order Markov chain over a fixed event alphabet; stands in for an
// artist's habitual melodic patterns when generating synthetic corpora.
struct ArtistProfile {
  std::string artist;
  std::vector<NoteEvent> alphabet;  // nonempty
  Eigen::MatrixXd transitions;      // row-stochastic, alphabet x alphabet
  Eigen::VectorXd initial;          // start distribution; empty -> uniform
};

// Throws InputError on empty alphabet, shape mismatch, negative entries, or
// rows not summing to 1 within 1e-9.
void validate_profile(const ArtistProfile& profile);

// Deterministic in (profiles, counts, seed). Tracks are emitted profile by
// profile; track i of a profile is titled "<artist>-<i+1>" (3-digit padded)
// and bars = ceil(events / 8).
std::vector<MelodyTrack> generate_corpus(const std::vector<ArtistProfile>& profiles,
                                         int tracks_per_artist, int events_per_track,
                                         std::uint64_t seed);

// Profile file: JSON {"profiles":[{"artist","alphabet","transitions","initial"?}]}
// where alphabet entries use the melody-event schema.
std::vector<ArtistProfile> parse_profiles(std::string_view text);

std::string serialize_profiles(const std::vector<ArtistProfile>& profiles);

}  // namespace melodynet
