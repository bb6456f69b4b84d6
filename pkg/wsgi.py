"""
gunicorn entry point: gunicorn --config gunicorn.conf.py wsgi:app
"""
from app import app

__all__ = ['app']

if __name__ == "__main__":
    app.run()
