"""Test suite for the ADRA CiM simulator."""
