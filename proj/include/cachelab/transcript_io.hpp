#pragma once

#include <iosfwd>
#include <string>

#include "cachelab/delivery.hpp"

namespace cachelab {

// Structured text form of a transcript: a header describing the instance and
// the canonicalized demand, one self-describing record per segment (label
// tuple plus hex payload), and a trailing summary with exact decimal bit
// counts. No floating point anywhere in the format.
void serialize_transcript(const DeliveryTranscript& transcript, std::ostream& out);
std::string serialize_transcript(const DeliveryTranscript& transcript);

// Inverse of serialize_transcript; validates the header, the per-segment
// payload lengths and the summary accounting. Throws std::invalid_argument
// on malformed input.
DeliveryTranscript parse_transcript(std::istream& in);
DeliveryTranscript parse_transcript(const std::string& text);

}  // namespace cachelab
