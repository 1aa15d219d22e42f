# Paquete de configuración: constantes y logging.
