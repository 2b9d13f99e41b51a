"""acm-toolkit - SACM 2.0 assurance case models, GSN/CAE transformations and tooling."""

__version__ = "0.1.0"
