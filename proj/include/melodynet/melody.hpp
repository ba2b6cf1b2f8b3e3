#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace melodynet {

// Bad input data (file contents, user-supplied names/paths). The CLI maps
// this category to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Melody file rejected: either malformed text (position reported) or a
// validated field out of contract (offending event index reported).
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// Exact fraction of a whole note, kept in lowest terms.
struct Duration {
  std::int64_t num = 1;
  std::int64_t den = 1;

  friend bool operator==(const Duration&, const Duration&) = default;
  friend auto operator<=>(const Duration&, const Duration&) = default;
};

// Reduces to lowest terms; throws InputError unless num >= 1 and den >= 1.
Duration make_duration(std::int64_t num, std::int64_t den);

// "num-den" with positive integers, e.g. "1-8".
std::string duration_string(const Duration& d);

enum class NoteKind { Note, Rest, Chord };

struct ChordMember {
  std::string pitch;  // letter A..G plus optional "#"/"b" suffix
  int octave = 0;

  friend bool operator==(const ChordMember&, const ChordMember&) = default;
};

// Canonical member order: by (octave, pitch token).
bool chord_member_less(const ChordMember& a, const ChordMember& b);

struct NoteEvent {
  NoteKind kind = NoteKind::Note;
  std::string pitch;                  // note only
  int octave = 0;                     // note only
  Duration duration;                  // always present
  std::vector<ChordMember> members;   // chord only; sorted, no duplicates

  friend bool operator==(const NoteEvent&, const NoteEvent&) = default;
};

NoteEvent make_note(std::string pitch, int octave, std::int64_t num, std::int64_t den);
NoteEvent make_rest(std::int64_t num, std::int64_t den);
// Members may arrive in any order; they are sorted into canonical order.
NoteEvent make_chord(std::vector<ChordMember> members, std::int64_t num, std::int64_t den);

// Pitch-class token: letter A-G plus optional accidental marker ("#" or "b").
// Enharmonic spellings are distinct tokens by design.
bool valid_pitch(std::string_view token);

struct MelodyTrack {
  std::string artist;
  std::string title;
  int bars = 1;                   // count of measures spanned by the track
  std::vector<NoteEvent> events;  // nonempty, file order

  friend bool operator==(const MelodyTrack&, const MelodyTrack&) = default;
};

// Unique node identity of an event. Grammar:
//   note  -> "pitch/octave/num-den"          e.g. "G/5/1-8"
//   rest  -> "rest/num-den"                  e.g. "rest/1-8"
//   chord -> member labels without duration, sorted, joined by "+",
//            then "/num-den"                 e.g. "C/4+E/4+G/4/1-4"
std::string canonical_label(const NoteEvent& event);

// Parses a melody file (UTF-8 JSON, see README for the schema) into a
// validated track. Event order equals file order.
MelodyTrack parse_melody(std::string_view text);

// Canonical byte serialization; parse_melody followed by serialize_melody is
// idempotent on the bytes.
std::string serialize_melody(const MelodyTrack& track);

}  // namespace melodynet
