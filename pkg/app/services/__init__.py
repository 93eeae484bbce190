"""Camada de serviços: dispositivo, array, sensoriamento, cômputo e energia."""
