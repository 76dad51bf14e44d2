"""Operads and incidence bialgebras on set partitions, with exact moment-cumulant relations."""
