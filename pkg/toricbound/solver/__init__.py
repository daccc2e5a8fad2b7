# pylint: disable=redefined-builtin, wildcard-import
"""The module of relation search algorithms of toricbound"""
