"""Exact computations for logarithmic W-algebras of simply-laced type."""
