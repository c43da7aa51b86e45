from django.apps import AppConfig


class GraphclassesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'graphclasses'
    verbose_name = 'Классы графов'
