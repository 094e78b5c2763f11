#pragma once

// Template node ids as NodeId values, named after their wire spelling.

#include <ostream>

#include "admintm/error.hpp"
#include "admintm/process_model.hpp"

namespace admintm {

inline void PrintTo(const NodeId& id, std::ostream* os) { *os << id.value; }
inline void PrintTo(const Edge& e, std::ostream* os) { *os << describe(e); }
inline void PrintTo(ErrorCode c, std::ostream* os) { *os << to_string(c); }

}  // namespace admintm

namespace admintm::testing::ids {

inline const NodeId requirement_engineering{node_ids::requirement_engineering};
inline const NodeId data_preparation{node_ids::data_preparation};
inline const NodeId feature_engineering_labelling{node_ids::feature_engineering_labelling};
inline const NodeId model_training{node_ids::model_training};
inline const NodeId model_evaluation_during_development{node_ids::model_evaluation_during_development};
inline const NodeId hyperparameter_tuning{node_ids::hyperparameter_tuning};
inline const NodeId model_evaluation_after_development{node_ids::model_evaluation_after_development};
inline const NodeId software_deployment{node_ids::software_deployment};
inline const NodeId decision_making{node_ids::decision_making};
inline const NodeId model_evaluation_during_deployment{node_ids::model_evaluation_during_deployment};
inline const NodeId d1{node_ids::performance_adequate};
inline const NodeId d2{node_ids::model_adequate};
inline const NodeId d3{node_ids::deployed_model_adequate};
inline const NodeId a_system_domain_info{node_ids::system_domain_info};
inline const NodeId a_stakeholder_requirements{node_ids::stakeholder_requirements};
inline const NodeId a_regulations{node_ids::regulations};
inline const NodeId a_requirements_spec{node_ids::requirements_spec};
inline const NodeId a_raw_dataset{node_ids::raw_dataset};
inline const NodeId a_clean_dataset{node_ids::clean_dataset};
inline const NodeId a_features{node_ids::features};
inline const NodeId a_labels{node_ids::labels};
inline const NodeId a_training_dataset{node_ids::training_dataset};
inline const NodeId a_validation_dataset{node_ids::validation_dataset};
inline const NodeId a_testing_dataset{node_ids::testing_dataset};
inline const NodeId a_algorithm{node_ids::algorithm};
inline const NodeId a_trained_model{node_ids::trained_model};
inline const NodeId a_optimized_model{node_ids::optimized_model};
inline const NodeId a_production_data{node_ids::production_data};
inline const NodeId a_prediction{node_ids::prediction};
inline const NodeId a_decision{node_ids::decision};

}  // namespace admintm::testing::ids
