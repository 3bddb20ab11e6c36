"""Ensembles simpliciaux et cycliques finis: constructions, audits et recensement."""
