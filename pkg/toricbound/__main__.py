"""
The package and console entry.
"""

from toricbound.main import Main

if __name__ == '__main__':
    Main().main()
