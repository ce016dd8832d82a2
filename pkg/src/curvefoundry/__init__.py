"""curvefoundry: pairing-friendly elliptic curve parameter foundry."""

__version__ = "0.1.0"
