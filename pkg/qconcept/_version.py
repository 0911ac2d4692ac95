"""Package version, read by ``qconcept --version``."""

__version__ = "0.1.0"  # x-release-please-version
