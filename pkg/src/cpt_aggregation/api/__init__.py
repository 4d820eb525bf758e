"""API components for CPT aggregation."""

from cpt_aggregation.api.aggregation_api import AggregationAPI, ComparisonResult, ProcessingError
from cpt_aggregation.api.async_aggregation_api import AsyncAggregationAPI

__all__ = ["AggregationAPI", "AsyncAggregationAPI", "ComparisonResult", "ProcessingError"]
