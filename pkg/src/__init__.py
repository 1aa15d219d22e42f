# Paquete raíz del código; run.py y pytest.ini ponen src en sys.path.
