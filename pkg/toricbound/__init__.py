# pylint: disable=redefined-builtin, wildcard-import
"""The top module of toricbound"""
