"""Configuration package for environment settings."""
