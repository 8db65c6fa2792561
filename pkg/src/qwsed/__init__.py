"""Sedentariness of continuous-time quantum walks on weighted graphs."""
