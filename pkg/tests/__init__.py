"""Test suite for cpt-aggregation."""
