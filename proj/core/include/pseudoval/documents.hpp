#pragma once

#include "pseudoval/lambda_topology.hpp"
#include "pseudoval/residue_zar.hpp"

namespace pseudoval {

// Structured (JSON) document forms. Parsing reads the embedded "config" key where
// one is present; printers emit canonical forms that re-parse to equal values.

std::string elementToDoc(const FieldElem& e);
FieldElem elementFromDoc(const std::string& doc);

std::string seqSpecToDoc(const SeqSpec& spec);
SeqSpec seqSpecFromDoc(const std::string& doc);

std::string lambdaSpaceToDoc(const LambdaSpace& space);
LambdaSpace lambdaSpaceFromDoc(const std::string& doc);

std::string xadToDoc(const XadDescriptor& d);
XadDescriptor xadFromDoc(const std::string& doc);

} // namespace pseudoval
