#pragma once

#include <json.hpp>

#include "unipcert/catalog.hpp"
#include "unipcert/duality.hpp"
#include "unipcert/induction.hpp"
#include "unipcert/parabolic.hpp"
#include "unipcert/tableau.hpp"
#include "unipcert/verify.hpp"

namespace unipcert {

// Field order is part of the output contract, hence ordered_json.
using ojson = nlohmann::ordered_json;

ojson to_json(const RealForm& rf);
ojson to_json(const LeviSequence& levi);
ojson to_json(const AqDatum& datum);
ojson to_json(const InductionStep& step);
ojson to_json(const InducedDatum& datum);
ojson to_json(const UnipotentRecord& rec);
ojson to_json(const UnitarityCertificate& cert);
ojson to_json(const SpecialEntry& entry);
ojson to_json(const IcReport& report);
ojson to_json(const VerifyReport& report);

}  // namespace unipcert
