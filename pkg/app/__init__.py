"""ADRA CiM Simulator: computação em memória com ativação assimétrica de duas linhas."""
